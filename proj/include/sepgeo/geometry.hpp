// geometry.hpp — Euclidean geometry of density-matrix space: the enclosing
// ball radius, radial fractions, the ratio in which an inscribed regular
// simplex divides a radius, product-basis simplices and the
// absolute-separability radius.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sepgeo/states.hpp"

namespace sepgeo {

inline constexpr double kBasisTol = 1e-9;

// Radius sqrt((N-1)/N) of the ball of order-N density matrices around the
// normalized identity; pure states lie on the boundary sphere.
inline double ball_radius(int order) {
    if (order < 2) throw RangeError("ball_radius: order must be >= 2");
    const double n = static_cast<double>(order);
    return std::sqrt((n - 1.0) / n);
}

// Minimum ratio in which the regular (N^2-1)-simplex inscribed in the state
// ball divides a proper radius: 1/(N+1). This is the separability threshold
// for the N x N Werner family.
inline double simplex_division_ratio(int order) {
    if (order < 2) throw RangeError("simplex_division_ratio: order must be >= 2");
    return 1.0 / static_cast<double>(order + 1);
}

struct SimplexRatios {
    int order_N;
    double ball_radius;
    double division_ratio;
};

inline SimplexRatios simplex_ratios(int order) {
    return {order, ball_radius(order), simplex_division_ratio(order)};
}

// Lengths in the similar-triangles construction that locates where the
// inscribed regular (N^2-1)-simplex cuts a proper radius of the ball.
// All lengths are measured from the ball center (the normalized identity)
// except outer_to_foot, which closes the right triangle with the radius.
struct RadiusCutLengths {
    double circumradius;      // center to the pure-state endpoint of the radius
    double outer_to_foot;     // pure-state endpoint to the perpendicular foot
    double center_to_foot;    // circumradius / (N-1)
    double simplex_inradius;  // circumradius / (N^2-1)
    double center_to_cut;     // simplex_inradius * (N-1)
    double division_ratio;    // center_to_cut / circumradius = 1/(N+1)
};

inline RadiusCutLengths radius_cut_lengths(int order) {
    if (order < 2) throw RangeError("radius_cut_lengths: order must be >= 2");
    const double n = static_cast<double>(order);
    RadiusCutLengths lengths{};
    lengths.circumradius     = std::sqrt((n - 1.0) / n);
    lengths.outer_to_foot    = std::sqrt((n - 2.0) / (n - 1.0));
    lengths.center_to_foot   = lengths.circumradius / (n - 1.0);
    lengths.simplex_inradius = lengths.circumradius / (n * n - 1.0);
    lengths.center_to_cut    = lengths.simplex_inradius * (n - 1.0);
    lengths.division_ratio   = lengths.center_to_cut / lengths.circumradius;
    return lengths;
}

// Distance from the normalized identity as a fraction of the ball radius;
// 0 at the center, 1 on the pure-state sphere.
inline double radial_fraction(const DensityMatrix& rho) {
    const long order = rho.order();
    const double dist = hs_distance(rho.matrix(), maximally_mixed(order));
    const double fraction = dist / ball_radius(static_cast<int>(order));
    if (fraction > 1.0 + 1e-9)
        throw GeometryError("radial_fraction: fraction " + std::to_string(fraction) +
                            " exceeds 1; invalid input slipped past validation");
    return fraction;
}

namespace detail {

inline void check_orthogonal_pure_basis(const std::vector<DensityMatrix>& basis,
                                        const char* which) {
    if (basis.empty())
        throw BasisError(std::string("product_basis: ") + which + " basis is empty");
    const long order = basis.front().order();
    if (static_cast<long>(basis.size()) != order)
        throw BasisError(std::string("product_basis: ") + which + " basis has " +
                         std::to_string(basis.size()) + " states but order " +
                         std::to_string(order) + " requires a complete basis");
    for (const auto& state : basis) {
        if (state.order() != order)
            throw BasisError(std::string("product_basis: ") + which +
                             " basis states differ in order");
        if (purity(state) < 1.0 - kPurityTol)
            throw BasisError(std::string("product_basis: ") + which +
                             " basis contains a mixed state (purity " +
                             std::to_string(purity(state)) + ")");
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const double overlap = hs_inner(basis[i].matrix(), basis[j].matrix());
            if (std::abs(overlap) > kBasisTol)
                throw BasisError(std::string("product_basis: ") + which + " basis states " +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 " overlap by " + std::to_string(overlap));
        }
}

} // namespace detail

// All d_A * d_B Kronecker products of two complete orthogonal pure bases.
// The outputs are the vertices of a regular (d_A*d_B - 1)-simplex of
// separable states centered at the normalized identity.
inline std::vector<DensityMatrix> product_basis(const std::vector<DensityMatrix>& basis_a,
                                                const std::vector<DensityMatrix>& basis_b) {
    detail::check_orthogonal_pure_basis(basis_a, "left");
    detail::check_orthogonal_pure_basis(basis_b, "right");

    std::vector<DensityMatrix> products;
    products.reserve(basis_a.size() * basis_b.size());
    for (const auto& a : basis_a)
        for (const auto& b : basis_b) {
            std::vector<int> dims = a.dims().dims();
            dims.insert(dims.end(), b.dims().dims().begin(), b.dims().dims().end());
            products.emplace_back(kron(a.matrix(), b.matrix()), SubsystemDims(dims));
        }
    return products;
}

// Every n-qudit state within this distance of the normalized identity is
// separable (and stays separable under any global unitary):
// (1/(1+d^{n-1})) * sqrt((d^n - 1)/d^n).
inline double absolute_sep_radius(int n, int d) {
    if (n < 1) throw RangeError("absolute_sep_radius: need n >= 1");
    if (d < 2) throw RangeError("absolute_sep_radius: local dimension must be >= 2");
    double rest = 1.0;  // d^{n-1}
    for (int k = 0; k < n - 1; ++k) rest *= static_cast<double>(d);
    const double total = rest * static_cast<double>(d);  // d^n
    return (1.0 / (1.0 + rest)) * std::sqrt((total - 1.0) / total);
}

} // namespace sepgeo
