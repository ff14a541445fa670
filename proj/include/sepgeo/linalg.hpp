// linalg.hpp — dense complex matrix algebra: Kronecker products, partial
// trace/transpose, subsystem permutation, Hermitian eigendecomposition and
// the Hilbert–Schmidt metric.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <set>
#include <string>
#include <vector>

#include "sepgeo/errors.hpp"

namespace sepgeo {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;

inline constexpr double kHermitianTol  = 1e-9;  // max |a(i,j) - conj(a(j,i))|
inline constexpr double kTraceTol      = 1e-9;
inline constexpr double kPositivityTol = 1e-9;  // eigenvalues >= -kPositivityTol
inline constexpr int    kMaxOrder      = 1024;

// Ordered local dimensions d_0,...,d_{n-1}. Index 0 is the leftmost (most
// significant) tensor factor: the row/column index of the full matrix is the
// mixed-radix encoding of the subsystem indices.
class SubsystemDims {
public:
    explicit SubsystemDims(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty())
            throw DimensionError("SubsystemDims: need at least one subsystem");
        long prod = 1;
        for (int d : dims_) {
            if (d < 2)
                throw DimensionError("SubsystemDims: local dimensions must be >= 2, got " +
                                     std::to_string(d));
            prod *= d;
            if (prod > 1024L * 1024L)
                throw SizeError("SubsystemDims: total order exceeds supported range");
        }
        order_ = prod;
    }

    SubsystemDims(std::initializer_list<int> dims) : SubsystemDims(std::vector<int>(dims)) {}

    int count() const { return static_cast<int>(dims_.size()); }
    int dim(int k) const { return dims_[static_cast<std::size_t>(k)]; }
    long order() const { return order_; }
    const std::vector<int>& dims() const { return dims_; }

    bool operator==(const SubsystemDims& other) const { return dims_ == other.dims_; }
    bool operator!=(const SubsystemDims& other) const { return !(*this == other); }

private:
    std::vector<int> dims_;
    long order_ = 0;
};

namespace detail {

// stride of subsystem k: product of the dimensions to its right
inline std::vector<long> strides(const SubsystemDims& dims) {
    const int n = dims.count();
    std::vector<long> s(static_cast<std::size_t>(n), 1);
    for (int k = n - 2; k >= 0; --k)
        s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k) + 1] * dims.dim(k + 1);
    return s;
}

// Full-matrix index offsets of every digit combination of `subset`
// (ascending subsystem indices; the first subset element varies slowest).
inline std::vector<long> subset_offsets(const SubsystemDims& dims, const std::vector<int>& subset) {
    const auto str = strides(dims);
    std::vector<long> offs{0};
    for (int s : subset) {
        std::vector<long> next;
        next.reserve(offs.size() * static_cast<std::size_t>(dims.dim(s)));
        for (long base : offs)
            for (int i = 0; i < dims.dim(s); ++i)
                next.push_back(base + i * str[static_cast<std::size_t>(s)]);
        offs = std::move(next);
    }
    return offs;
}

inline std::vector<int> check_subset(const SubsystemDims& dims, const std::set<int>& subset,
                                     const char* where) {
    for (int s : subset)
        if (s < 0 || s >= dims.count())
            throw DimensionError(std::string(where) + ": subsystem index " + std::to_string(s) +
                                 " out of range for " + std::to_string(dims.count()) +
                                 " subsystems");
    return {subset.begin(), subset.end()};
}

inline std::vector<int> complement(const SubsystemDims& dims, const std::vector<int>& subset) {
    std::vector<int> rest;
    std::size_t j = 0;
    for (int k = 0; k < dims.count(); ++k) {
        if (j < subset.size() && subset[j] == k) { ++j; continue; }
        rest.push_back(k);
    }
    return rest;
}

inline SubsystemDims select_dims(const SubsystemDims& dims, const std::vector<int>& subset) {
    std::vector<int> d;
    d.reserve(subset.size());
    for (int k : subset) d.push_back(dims.dim(k));
    return SubsystemDims(d);
}

inline void check_attached(const Matrix& m, const SubsystemDims& dims, const char* where) {
    if (m.rows() != m.cols())
        throw DimensionError(std::string(where) + ": matrix is not square");
    if (m.rows() != dims.order())
        throw DimensionError(std::string(where) + ": matrix order " + std::to_string(m.rows()) +
                             " does not match subsystem product " + std::to_string(dims.order()));
}

} // namespace detail

inline Matrix identity(long order) { return Matrix::Identity(order, order); }

inline Matrix maximally_mixed(long order) {
    return Matrix::Identity(order, order) / static_cast<double>(order);
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    out = Eigen::kroneckerProduct(a, b);
    return out;
}

inline double hermiticity_defect(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("hermiticity_defect: matrix is not square");
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& a, double tol = kHermitianTol) {
    return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

inline void require_hermitian(const Matrix& a, const char* where) {
    if (a.rows() != a.cols())
        throw DimensionError(std::string(where) + ": matrix is not square");
    if (!a.allFinite())
        throw RangeError(std::string(where) + ": non-finite entry");
    const double defect = hermiticity_defect(a);
    if (!(defect <= kHermitianTol))
        throw HermiticityError(std::string(where) + ": matrix is not Hermitian, max |a(i,j) - conj(a(j,i))| = " +
                               std::to_string(defect));
}

// Trace out the subsystems in `traced`; the remaining subsystems keep their
// original relative order. `traced` must be a proper (possibly empty) subset.
inline Matrix partial_trace(const Matrix& m, const SubsystemDims& dims,
                            const std::set<int>& traced) {
    detail::check_attached(m, dims, "partial_trace");
    const auto tr = detail::check_subset(dims, traced, "partial_trace");
    if (static_cast<int>(tr.size()) == dims.count())
        throw InvalidPartition("partial_trace: cannot trace out every subsystem; use trace()");
    if (tr.empty()) return m;

    const auto kept = detail::complement(dims, tr);
    const auto kept_offs = detail::subset_offsets(dims, kept);
    const auto tr_offs   = detail::subset_offsets(dims, tr);

    const long out_n = static_cast<long>(kept_offs.size());
    Matrix out = Matrix::Zero(out_n, out_n);
    for (long r = 0; r < out_n; ++r)
        for (long c = 0; c < out_n; ++c) {
            Complex sum(0.0, 0.0);
            for (long t : tr_offs)
                sum += m(kept_offs[static_cast<std::size_t>(r)] + t,
                         kept_offs[static_cast<std::size_t>(c)] + t);
            out(r, c) = sum;
        }
    return out;
}

// Transpose the indices of the subsystems in `transposed` between row and
// column; other subsystems are untouched.
inline Matrix partial_transpose(const Matrix& m, const SubsystemDims& dims,
                                const std::set<int>& transposed) {
    detail::check_attached(m, dims, "partial_transpose");
    const auto tp = detail::check_subset(dims, transposed, "partial_transpose");
    if (tp.empty()) return m;

    const auto kept = detail::complement(dims, tp);
    const auto kept_offs = detail::subset_offsets(dims, kept);
    const auto tp_offs   = detail::subset_offsets(dims, tp);

    Matrix out(m.rows(), m.cols());
    for (long a : kept_offs)
        for (long b : kept_offs)
            for (long s : tp_offs)
                for (long u : tp_offs)
                    out(a + s, b + u) = m(a + u, b + s);
    return out;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        inv[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
    return inv;
}

// Reorder tensor factors: slot k of the result holds subsystem perm[k] of the
// input. Entries move by the mixed-radix index bijection; permuting with the
// inverse permutation restores the input exactly.
inline Matrix permute_subsystems(const Matrix& m, const SubsystemDims& dims,
                                 const std::vector<int>& perm) {
    detail::check_attached(m, dims, "permute_subsystems");
    if (static_cast<int>(perm.size()) != dims.count())
        throw DimensionError("permute_subsystems: permutation length mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= dims.count() || seen[static_cast<std::size_t>(p)])
            throw DimensionError("permute_subsystems: not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(p)] = true;
    }

    std::vector<int> out_dims;
    out_dims.reserve(perm.size());
    for (int p : perm) out_dims.push_back(dims.dim(p));
    const SubsystemDims odims(out_dims);

    const auto in_strides  = detail::strides(dims);
    const auto out_strides = detail::strides(odims);

    // map[r_out] = r_in: digit k of r_out is the digit of input subsystem perm[k]
    const long n = dims.order();
    std::vector<long> map(static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r) {
        long rem = r, rin = 0;
        for (int k = 0; k < odims.count(); ++k) {
            const long digit = rem / out_strides[static_cast<std::size_t>(k)];
            rem %= out_strides[static_cast<std::size_t>(k)];
            rin += digit * in_strides[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
        }
        map[static_cast<std::size_t>(r)] = rin;
    }

    Matrix out(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
            out(r, c) = m(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]);
    return out;
}

// Hilbert–Schmidt inner product Tr(a† b), real part. For Hermitian inputs the
// imaginary part vanishes and this is the Euclidean inner product.
inline double hs_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("hs_inner: dimension mismatch");
    return (a.adjoint() * b).trace().real();
}

// Hilbert–Schmidt (Euclidean) distance sqrt(Tr (a-b)^2) between Hermitian
// matrices; equals the Frobenius norm of the difference.
inline double hs_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("hs_distance: dimension mismatch");
    require_hermitian(a, "hs_distance");
    require_hermitian(b, "hs_distance");
    return (a - b).norm();
}

struct Eigensystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // column k pairs with values[k]
};

inline Eigensystem hermitian_eigensystem(const Matrix& a) {
    require_hermitian(a, "hermitian_eigensystem");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eigensystem: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// All real eigenvalues, sorted ascending.
inline std::vector<double> hermitian_eigenvalues(const Matrix& a) {
    require_hermitian(a, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eigenvalues: eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

} // namespace sepgeo
