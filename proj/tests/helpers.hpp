// helpers.hpp — test-only utilities: independent reference implementations
// used as oracles against the library, plus random-object generators. These
// deliberately use different algorithms / loop structures than the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sepgeo/sepgeo.hpp"

namespace testing_support {

using sepgeo::Complex;
using sepgeo::Matrix;
using sepgeo::Vector;

// Kronecker product by the defining entry formula.
inline Matrix naive_kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// sqrt(Tr (a-b)^2) via an explicit matrix product and trace sum.
inline double naive_hs_distance(const Matrix& a, const Matrix& b) {
    const Matrix diff = a - b;
    const Matrix sq = diff * diff;
    Complex tr(0.0, 0.0);
    for (Eigen::Index i = 0; i < sq.rows(); ++i) tr += sq(i, i);
    return std::sqrt(tr.real());
}

inline std::vector<long> mixed_radix_digits(long index, const std::vector<int>& dims) {
    std::vector<long> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
    return digits;
}

// Partial trace by scanning every full-matrix entry and accumulating those
// whose traced digits coincide on the row and column.
inline Matrix naive_partial_trace(const Matrix& m, const std::vector<int>& dims,
                                  const std::set<int>& traced) {
    std::vector<int> kept_dims;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!traced.count(static_cast<int>(k))) kept_dims.push_back(dims[k]);
    long out_n = 1;
    for (int d : kept_dims) out_n *= d;

    auto kept_index = [&](long full) {
        const auto digits = mixed_radix_digits(full, dims);
        long idx = 0;
        for (std::size_t k = 0; k < dims.size(); ++k)
            if (!traced.count(static_cast<int>(k))) idx = idx * dims[k] + digits[k];
        return idx;
    };
    auto traced_digits_match = [&](long r, long c) {
        const auto dr = mixed_radix_digits(r, dims);
        const auto dc = mixed_radix_digits(c, dims);
        for (int t : traced)
            if (dr[static_cast<std::size_t>(t)] != dc[static_cast<std::size_t>(t)]) return false;
        return true;
    };

    Matrix out = Matrix::Zero(out_n, out_n);
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c)
            if (traced_digits_match(r, c)) out(kept_index(r), kept_index(c)) += m(r, c);
    return out;
}

// M = P_A (x) I_B assembled entrywise from the defining formula
// M[(iA,iB),(jA,jB)] = t[iA] conj(t[jA]) delta_{iB,jB}.
inline Matrix naive_embed(const sepgeo::PureKet& target, const std::vector<int>& dims,
                          const std::vector<int>& measured_ascending) {
    long n = 1;
    for (int d : dims) n *= d;
    std::set<int> measured(measured_ascending.begin(), measured_ascending.end());

    auto split = [&](long full) {
        const auto digits = mixed_radix_digits(full, dims);
        long a = 0, b = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (measured.count(static_cast<int>(k)))
                a = a * dims[k] + digits[k];
            else
                b = b * dims[k] + digits[k];
        }
        return std::pair<long, long>(a, b);
    };

    Matrix out = Matrix::Zero(n, n);
    for (long r = 0; r < n; ++r) {
        const auto [ra, rb] = split(r);
        for (long c = 0; c < n; ++c) {
            const auto [ca, cb] = split(c);
            if (rb != cb) continue;
            out(r, c) = target.amplitude(static_cast<int>(ra)) *
                        std::conj(target.amplitude(static_cast<int>(ca)));
        }
    }
    return out;
}

inline Matrix random_matrix(long order, sepgeo::GaussianSource& src) {
    Matrix m(order, order);
    for (long r = 0; r < order; ++r)
        for (long c = 0; c < order; ++c) m(r, c) = src.complex_gaussian();
    return m;
}

inline Matrix random_hermitian(long order, sepgeo::GaussianSource& src) {
    const Matrix m = random_matrix(order, src);
    return 0.5 * (m + m.adjoint());
}

// full-rank random state: G G† normalized to unit trace
inline sepgeo::DensityMatrix random_density(const sepgeo::SubsystemDims& dims,
                                            sepgeo::GaussianSource& src) {
    const Matrix g = random_matrix(dims.order(), src);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    return sepgeo::DensityMatrix(std::move(m), dims);
}

// orthonormal basis kets: Q columns of a QR-decomposed Gaussian matrix
inline std::vector<sepgeo::PureKet> random_orthonormal_basis(int dim,
                                                             sepgeo::GaussianSource& src) {
    const Matrix g = random_matrix(dim, src);
    Eigen::HouseholderQR<Matrix> qr(g);
    const Matrix q = qr.householderQ();
    std::vector<sepgeo::PureKet> kets;
    kets.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) kets.emplace_back(Vector(q.col(k)));
    return kets;
}

// complex entries with small integer parts; products of three are exact in
// double precision
inline Matrix random_integer_matrix(long order, sepgeo::GaussianSource& src) {
    Matrix m(order, order);
    for (long r = 0; r < order; ++r)
        for (long c = 0; c < order; ++c) {
            const double re = std::floor(src.uniform() * 9.0) - 4.0;
            const double im = std::floor(src.uniform() * 9.0) - 4.0;
            m(r, c) = Complex(re, im);
        }
    return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace testing_support
