#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "sepgeo/sepgeo.hpp"

using namespace sepgeo;
using namespace testing_support;
using Catch::Matchers::WithinAbs;

TEST_CASE("ball_radius closed forms", "[geometry][ball]") {
    REQUIRE_THAT(ball_radius(2), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    REQUIRE_THAT(ball_radius(3), WithinAbs(std::sqrt(2.0 / 3.0), 1e-15));
    REQUIRE_THAT(ball_radius(4), WithinAbs(std::sqrt(3.0) / 2.0, 1e-15));
    REQUIRE_THROWS_AS(ball_radius(1), RangeError);
}

TEST_CASE("ball_radius matches the distance of random pure states", "[geometry][ball][property]") {
    GaussianSource src(41);
    for (int order : {2, 3, 4, 8}) {
        const double radius = ball_radius(order);
        for (int rep = 0; rep < 20; ++rep) {
            const PureKet psi = random_pure(order, src);
            const double dist = hs_distance(psi.projector(), maximally_mixed(order));
            REQUIRE_THAT(dist, WithinAbs(radius, 1e-12));
        }
    }
}

TEST_CASE("simplex_division_ratio closed forms", "[geometry][simplex]") {
    REQUIRE_THAT(simplex_division_ratio(2), WithinAbs(1.0 / 3.0, 1e-16));
    REQUIRE_THAT(simplex_division_ratio(3), WithinAbs(0.25, 1e-16));
    REQUIRE_THAT(simplex_division_ratio(4), WithinAbs(0.2, 1e-16));
    REQUIRE_THROWS_AS(simplex_division_ratio(1), RangeError);
}

TEST_CASE("simplex_division_ratio is the rational 1/(N+1)", "[geometry][simplex][property]") {
    for (int order = 2; order <= 32; ++order) {
        const double computed = simplex_division_ratio(order);
        REQUIRE(computed == 1.0 / static_cast<double>(order + 1));  // same rounded rational
        REQUIRE(std::abs(computed - 1.0 / (order + 1.0)) <= 1e-15);
        // exact in rational arithmetic: (1/(N+1)) * (N+1) = (N+1)/(N+1)
        const long numerator = 1L * (order + 1);
        const long denominator = 1L * (order + 1);
        REQUIRE(numerator == denominator);
    }
}

TEST_CASE("simplex_ratios bundles consistent values", "[geometry][simplex]") {
    for (int order : {2, 3, 4, 9, 16}) {
        const SimplexRatios ratios = simplex_ratios(order);
        REQUIRE(ratios.order_N == order);
        REQUIRE_THAT(ratios.ball_radius * ratios.ball_radius,
                     WithinAbs((order - 1.0) / order, 1e-12));
        REQUIRE(ratios.division_ratio == simplex_division_ratio(order));
    }
}

TEST_CASE("radius cut lengths reproduce the similar-triangles chain", "[geometry][simplex]") {
    for (int order = 2; order <= 32; ++order) {
        const RadiusCutLengths lengths = radius_cut_lengths(order);
        const double n = order;
        REQUIRE_THAT(lengths.circumradius, WithinAbs(std::sqrt((n - 1.0) / n), 1e-15));
        REQUIRE_THAT(lengths.center_to_foot, WithinAbs(1.0 / std::sqrt(n * (n - 1.0)), 1e-15));
        REQUIRE_THAT(lengths.outer_to_foot, WithinAbs(std::sqrt((n - 2.0) / (n - 1.0)), 1e-15));
        // right triangle: radius^2 = foot^2 + chord^2
        REQUIRE_THAT(lengths.center_to_foot * lengths.center_to_foot +
                         lengths.outer_to_foot * lengths.outer_to_foot,
                     WithinAbs(lengths.circumradius * lengths.circumradius, 1e-12));
        REQUIRE_THAT(lengths.simplex_inradius * (n * n - 1.0),
                     WithinAbs(lengths.circumradius, 1e-12));
        REQUIRE_THAT(lengths.center_to_cut, WithinAbs(lengths.simplex_inradius * (n - 1.0), 1e-15));
        REQUIRE_THAT(lengths.division_ratio, WithinAbs(1.0 / (n + 1.0), 1e-15));
    }
}

TEST_CASE("radial_fraction endpoints", "[geometry][radial]") {
    REQUIRE_THAT(radial_fraction(DensityMatrix(maximally_mixed(4), SubsystemDims{2, 2})),
                 WithinAbs(0.0, 1e-15));

    GaussianSource src(42);
    for (int order : {2, 3, 4}) {
        const PureKet psi = random_pure(order, src);
        REQUIRE_THAT(radial_fraction(pure_state(psi, SubsystemDims{order})),
                     WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("radial_fraction round-trips the werner fraction", "[geometry][radial][property]") {
    REQUIRE_THAT(radial_fraction(werner(2, 2, 0.37)), WithinAbs(0.37, 1e-12));
    for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}})
        for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 1.0})
            REQUIRE_THAT(radial_fraction(werner(n, d, p)), WithinAbs(p, 1e-10));
}

TEST_CASE("radial_fraction flags states beyond the pure sphere", "[geometry][radial][errors]") {
    // valid within the positivity tolerance, yet fractionally outside the ball
    Matrix stretched = Matrix::Zero(2, 2);
    stretched(0, 0) = 1.0 + 9e-10;
    stretched(1, 1) = -9e-10;
    const DensityMatrix rho = validate(stretched, SubsystemDims{2});
    REQUIRE_THROWS_AS(radial_fraction(rho), GeometryError);
}

TEST_CASE("product_basis builds a regular simplex from computational bases", "[geometry][basis]") {
    const std::vector<DensityMatrix> qubit = {pure_state(basis_ket(2, 0), SubsystemDims{2}),
                                              pure_state(basis_ket(2, 1), SubsystemDims{2})};
    const auto products = product_basis(qubit, qubit);
    REQUIRE(products.size() == 4);

    // brute-force pairwise distances: every edge of the simplex equals
    // sqrt(Tr P + Tr Q - 2 Tr PQ) = sqrt(2) for orthogonal pure projectors
    for (std::size_t i = 0; i < products.size(); ++i)
        for (std::size_t j = i + 1; j < products.size(); ++j) {
            const double edge = hs_distance(products[i].matrix(), products[j].matrix());
            REQUIRE_THAT(edge, WithinAbs(std::sqrt(2.0), 1e-12));
            REQUIRE(std::abs(hs_inner(products[i].matrix(), products[j].matrix())) <= 1e-9);
        }

    Matrix centroid = Matrix::Zero(4, 4);
    for (const auto& state : products) centroid += state.matrix();
    centroid /= 4.0;
    REQUIRE(max_abs_diff(centroid, maximally_mixed(4)) < 1e-9);

    for (const auto& state : products)
        REQUIRE_THAT(hs_distance(state.matrix(), maximally_mixed(4)),
                     WithinAbs(ball_radius(4), 1e-12));
}

TEST_CASE("product_basis with random orthonormal qutrit bases", "[geometry][basis][property]") {
    GaussianSource src(43);
    std::vector<DensityMatrix> left, right;
    for (const auto& ket : random_orthonormal_basis(3, src))
        left.push_back(pure_state(ket, SubsystemDims{3}));
    for (const auto& ket : random_orthonormal_basis(3, src))
        right.push_back(pure_state(ket, SubsystemDims{3}));

    const auto products = product_basis(left, right);
    REQUIRE(products.size() == 9);

    double min_edge = 1e300, max_edge = 0.0;
    for (std::size_t i = 0; i < products.size(); ++i)
        for (std::size_t j = i + 1; j < products.size(); ++j) {
            const double edge = hs_distance(products[i].matrix(), products[j].matrix());
            min_edge = std::min(min_edge, edge);
            max_edge = std::max(max_edge, edge);
            REQUIRE(std::abs(hs_inner(products[i].matrix(), products[j].matrix())) <= 1e-9);
        }
    REQUIRE(max_edge - min_edge <= 1e-9);  // equidistance

    Matrix centroid = Matrix::Zero(9, 9);
    for (const auto& state : products) centroid += state.matrix();
    centroid /= 9.0;
    REQUIRE((centroid - maximally_mixed(9)).norm() <= 1e-9);

    for (const auto& state : products)
        REQUIRE_THAT(hs_distance(state.matrix(), maximally_mixed(9)),
                     WithinAbs(ball_radius(9), 1e-12));
}

TEST_CASE("product_basis rejects bad bases", "[geometry][basis][errors]") {
    const std::vector<DensityMatrix> qubit = {pure_state(basis_ket(2, 0), SubsystemDims{2}),
                                              pure_state(basis_ket(2, 1), SubsystemDims{2})};

    const std::vector<DensityMatrix> mixed = {DensityMatrix(maximally_mixed(2), SubsystemDims{2}),
                                              pure_state(basis_ket(2, 1), SubsystemDims{2})};
    REQUIRE_THROWS_AS(product_basis(mixed, qubit), BasisError);

    const Vector plus = (basis_ket(2, 0).amplitudes() + basis_ket(2, 1).amplitudes()) /
                        std::sqrt(2.0);
    const std::vector<DensityMatrix> overlapping = {pure_state(basis_ket(2, 0), SubsystemDims{2}),
                                                    pure_state(PureKet(plus), SubsystemDims{2})};
    REQUIRE_THROWS_AS(product_basis(qubit, overlapping), BasisError);

    const std::vector<DensityMatrix> incomplete = {pure_state(basis_ket(2, 0), SubsystemDims{2})};
    REQUIRE_THROWS_AS(product_basis(incomplete, qubit), BasisError);
}

TEST_CASE("absolute_sep_radius closed forms", "[geometry][absball]") {
    REQUIRE_THAT(absolute_sep_radius(2, 2), WithinAbs(1.0 / (2.0 * std::sqrt(3.0)), 1e-15));
    // degenerate single-system case evaluates the formula
    REQUIRE_THAT(absolute_sep_radius(1, 2), WithinAbs(0.5 / std::sqrt(2.0), 1e-15));
    REQUIRE_THROWS_AS(absolute_sep_radius(0, 2), RangeError);
    REQUIRE_THROWS_AS(absolute_sep_radius(2, 1), RangeError);
}

TEST_CASE("absolute_sep_radius factors through the threshold and ball radius",
          "[geometry][absball][property]") {
    for (int n : {2, 3})
        for (int d : {2, 3}) {
            long order = 1;
            for (int k = 0; k < n; ++k) order *= d;
            REQUIRE_THAT(absolute_sep_radius(n, d),
                         WithinAbs(werner_threshold(n, d) * ball_radius(static_cast<int>(order)),
                                   1e-12));
        }
}

TEST_CASE("werner states cross the absolute ball exactly at the threshold",
          "[geometry][absball][property]") {
    const double radius = absolute_sep_radius(2, 2);
    for (int step = 0; step <= 20; ++step) {
        const double p = step * 0.05;
        const double distance = radial_fraction(werner(2, 2, p)) * ball_radius(4);
        const bool inside = distance <= radius + 1e-12;
        REQUIRE(inside == (p <= 1.0 / 3.0 + 1e-9));
    }
}
