// states.hpp — constructors and validators for the states used throughout:
// computational-basis kets, maximally entangled n-qudit states, the W state,
// Werner mixtures and Haar-random pure states.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sepgeo/linalg.hpp"

namespace sepgeo {

inline constexpr double kKetNormTol = 1e-12;
inline constexpr double kPurityTol  = 1e-9;

// Unit vector in a finite-dimensional Hilbert space. The constructor
// normalizes, so a PureKet always has Euclidean norm 1.
class PureKet {
public:
    explicit PureKet(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() < 1)
            throw DimensionError("PureKet: empty amplitude vector");
        if (!amplitudes_.allFinite())
            throw RangeError("PureKet: non-finite amplitude");
        const double n = amplitudes_.norm();
        if (n <= 0.0)
            throw RangeError("PureKet: zero vector cannot be normalized");
        amplitudes_ /= n;
    }

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex amplitude(int i) const { return amplitudes_(i); }

    // |psi><psi|
    Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

private:
    Vector amplitudes_;
};

// Validated quantum state: Hermitian, unit trace and positive semidefinite
// within tolerance, with an attached subsystem-dimension list.
class DensityMatrix {
public:
    DensityMatrix(Matrix m, SubsystemDims dims) : matrix_(std::move(m)), dims_(std::move(dims)) {
        if (matrix_.rows() != matrix_.cols())
            throw DimensionError("DensityMatrix: matrix is not square");
        if (!matrix_.allFinite())
            throw RangeError("DensityMatrix: non-finite entry");
        if (matrix_.rows() != dims_.order())
            throw DimensionError("DensityMatrix: order " + std::to_string(matrix_.rows()) +
                                 " does not match subsystem product " +
                                 std::to_string(dims_.order()));
        const double herm = hermiticity_defect(matrix_);
        if (herm > kHermitianTol)
            throw HermiticityError("DensityMatrix: Hermiticity defect " + std::to_string(herm) +
                                   " exceeds " + std::to_string(kHermitianTol));
        const double trace_defect = std::abs(matrix_.trace().real() - 1.0) +
                                    std::abs(matrix_.trace().imag());
        if (trace_defect > kTraceTol)
            throw TraceError("DensityMatrix: |trace - 1| = " + std::to_string(trace_defect) +
                             " exceeds " + std::to_string(kTraceTol));
        Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw Error("DensityMatrix: eigensolver failed during validation");
        const double min_ev = solver.eigenvalues().minCoeff();
        if (min_ev < -kPositivityTol)
            throw PositivityError("DensityMatrix: minimum eigenvalue " + std::to_string(min_ev) +
                                  " below -" + std::to_string(kPositivityTol));
    }

    const Matrix& matrix() const { return matrix_; }
    const SubsystemDims& dims() const { return dims_; }
    long order() const { return matrix_.rows(); }

private:
    Matrix matrix_;
    SubsystemDims dims_;
};

// Check the three density-matrix invariants at the module tolerances and
// return the validated state. Throws HermiticityError / TraceError /
// PositivityError naming the violated invariant and its magnitude.
inline DensityMatrix validate(const Matrix& m, const SubsystemDims& dims) {
    return DensityMatrix(m, dims);
}

inline double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

inline PureKet basis_ket(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw DimensionError("basis_ket: index out of range");
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return PureKet(std::move(v));
}

inline DensityMatrix pure_state(const PureKet& ket, SubsystemDims dims) {
    return DensityMatrix(ket.projector(), std::move(dims));
}

namespace detail {

inline long checked_power(int d, int n, const char* where) {
    long prod = 1;
    for (int k = 0; k < n; ++k) {
        prod *= d;
        if (prod > kMaxOrder)
            throw SizeError(std::string(where) + ": d^n = " + std::to_string(d) + "^" +
                            std::to_string(n) + " exceeds the supported order " +
                            std::to_string(kMaxOrder));
    }
    return prod;
}

inline SubsystemDims uniform_dims(int n, int d) {
    return SubsystemDims(std::vector<int>(static_cast<std::size_t>(n), d));
}

} // namespace detail

// (1/sqrt(d)) sum_i |ii...i> over the d basis labels, n factors.
inline PureKet max_entangled_ket(int n, int d) {
    if (n < 2) throw RangeError("max_entangled: need at least two subsystems");
    if (d < 2) throw RangeError("max_entangled: local dimension must be >= 2");
    const long order = detail::checked_power(d, n, "max_entangled");
    long stride = 0;  // index step between |ii...i> and |(i+1)(i+1)...(i+1)>
    long q = 1;
    for (int k = 0; k < n; ++k) { stride += q; q *= d; }
    Vector v = Vector::Zero(order);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) v(i * stride) = amp;
    return PureKet(std::move(v));
}

inline DensityMatrix max_entangled(int n, int d) {
    const PureKet psi = max_entangled_ket(n, d);  // validates n, d and the order
    return pure_state(psi, detail::uniform_dims(n, d));
}

// (|001> + |010> + |100|)/sqrt(3)
inline PureKet w_ket() {
    Vector v = Vector::Zero(8);
    const double amp = 1.0 / std::sqrt(3.0);
    v(1) = amp;  // |001>
    v(2) = amp;  // |010>
    v(4) = amp;  // |100>
    return PureKet(std::move(v));
}

inline DensityMatrix w_state() {
    return pure_state(w_ket(), SubsystemDims{2, 2, 2});
}

// p |Psi><Psi| + (1-p)/d^n I, |Psi> the maximally entangled n-qudit state.
inline DensityMatrix werner(int n, int d, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw RangeError("werner: mixing fraction p = " + std::to_string(p) +
                         " outside [0, 1]");
    const PureKet psi = max_entangled_ket(n, d);
    const long order = psi.dim();
    Matrix m = p * psi.projector() +
               ((1.0 - p) / static_cast<double>(order)) * Matrix::Identity(order, order);
    return DensityMatrix(std::move(m), detail::uniform_dims(n, d));
}

// Deterministic Gaussian stream: std::mt19937_64 with 53-bit uniforms under
// Box–Muller. The stream is fully specified by the seed, so a fixed seed
// reproduces states bitwise on any platform.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        const double u = uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log1p(-u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
};

// Haar-distributed pure state: i.i.d. standard complex Gaussian amplitudes,
// normalized. Successive calls on one source draw successive states.
inline PureKet random_pure(int dim, GaussianSource& source) {
    if (dim < 2) throw RangeError("random_pure: dimension must be >= 2");
    for (;;) {
        Vector v(dim);
        for (int i = 0; i < dim; ++i) v(i) = source.complex_gaussian();
        if (v.norm() > 0.0) return PureKet(std::move(v));
    }
}

inline PureKet random_pure(int dim, std::uint64_t seed) {
    GaussianSource source(seed);
    return random_pure(dim, source);
}

} // namespace sepgeo
