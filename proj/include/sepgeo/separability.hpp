// separability.hpp — Werner separability thresholds, the pure-state
// entanglement measure e = 1 - p_max, the absolute-separability ball test,
// and the independent PPT / sampled-minimum oracles.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepgeo/geometry.hpp"
#include "sepgeo/measurement.hpp"

namespace sepgeo {

// Boundary comparisons are inclusive with this absolute tolerance.
inline constexpr double kBoundaryTol = 1e-9;

struct SeparabilityReport {
    double threshold_p = 0.0;     // worst-case separable fraction for the cut
    double q_min = 0.0;
    double p_max = 0.0;
    double entanglement_e = 0.0;  // 1 - p_max
    std::vector<int> measured_party;
    std::optional<bool> oracle_ppt_verdict;
    std::optional<double> oracle_qmin_sampled;
    std::string ppt_scope;        // "exact" | "necessary_only"
    // set when q_min < 1e-9: the measure cannot distinguish the state from a
    // product state across this cut (rank-deficient measured-party marginal)
    std::optional<std::string> warning;
};

namespace detail {

inline double integer_power_d(int base, int exponent) {
    double out = 1.0;
    for (int k = 0; k < exponent; ++k) out *= static_cast<double>(base);
    return out;
}

} // namespace detail

// Largest fraction p for which the n-qudit Werner state stays separable:
// 1/(d^{n-1} + 1).
inline double werner_threshold(int n, int d) {
    if (n < 2) throw RangeError("werner_threshold: need n >= 2");
    if (d < 2) throw RangeError("werner_threshold: local dimension must be >= 2");
    return 1.0 / (detail::integer_power_d(d, n - 1) + 1.0);
}

// Two-party N x N case: 1/(N+1), the simplex division ratio of the state ball.
inline double bipartite_werner_threshold(int local_dim) {
    if (local_dim < 2) throw RangeError("bipartite_werner_threshold: local dimension must be >= 2");
    return simplex_division_ratio(local_dim);
}

namespace detail {

inline void require_pure(const DensityMatrix& sigma, const char* where) {
    const double pur = purity(sigma);
    if (pur < 1.0 - kPurityTol)
        throw PurityError(std::string(where) + ": requires a pure state, got purity " +
                          std::to_string(pur));
}

} // namespace detail

// Minimum projection probability of the measured party over all rank-1
// targets: the smallest eigenvalue of that party's reduced density matrix
// (the probability for target |m> is <m| sigma_A |m>).
inline double q_min_exact(const DensityMatrix& sigma, const Bipartition& part) {
    detail::check_partition_fits(sigma.dims(), part, "q_min_exact");
    detail::require_pure(sigma, "q_min_exact");
    const std::set<int> traced(part.unmeasured().begin(), part.unmeasured().end());
    const Matrix marginal = partial_trace(sigma.matrix(), sigma.dims(), traced);
    const double min_ev = hermitian_eigenvalues(marginal).front();
    return std::clamp(min_ev, 0.0, 1.0);
}

// Brute-force oracle: minimum outcome probability over Haar-random targets.
// Can only overestimate q_min_exact; converges as samples grow.
inline double q_min_sampled(const DensityMatrix& sigma, const Bipartition& part, int samples,
                            std::uint64_t seed) {
    if (samples < 100) throw RangeError("q_min_sampled: need at least 100 samples");
    detail::require_pure(sigma, "q_min_sampled");
    double lowest = 1.0;
    for (const auto& outcome : measurement_sweep(sigma, part, samples, seed))
        lowest = std::min(lowest, outcome.probability);
    return lowest;
}

// PPT decides separability exactly only for 2x2 and 2x3 party dimensions;
// elsewhere it is a necessary condition.
inline std::string ppt_scope_label(const SubsystemDims& dims, const Bipartition& part) {
    const long a = part.measured_order(dims);
    const long b = part.unmeasured_order(dims);
    const long lo = std::min(a, b), hi = std::max(a, b);
    return (lo == 2 && (hi == 2 || hi == 3)) ? "exact" : "necessary_only";
}

inline double ppt_min_eigenvalue(const DensityMatrix& rho, const Bipartition& part) {
    detail::check_partition_fits(rho.dims(), part, "ppt_check");
    const std::set<int> transposed(part.unmeasured().begin(), part.unmeasured().end());
    const Matrix pt = partial_transpose(rho.matrix(), rho.dims(), transposed);
    return hermitian_eigenvalues(pt).front();
}

// Partial transpose over the unmeasured party; true iff the result stays
// positive semidefinite within tolerance.
inline bool ppt_check(const DensityMatrix& rho, const Bipartition& part) {
    return ppt_min_eigenvalue(rho, part) >= -kPositivityTol;
}

// e = 1 - p_max with p_max = 1/(1 + N q_min): how far along the radius from
// the normalized identity to sigma the states stay separable across the cut.
inline SeparabilityReport entanglement_measure(const DensityMatrix& sigma,
                                               const Bipartition& part) {
    detail::check_partition_fits(sigma.dims(), part, "entanglement_measure");
    detail::require_pure(sigma, "entanglement_measure");

    SeparabilityReport report;
    report.q_min = q_min_exact(sigma, part);
    const double order = static_cast<double>(sigma.order());
    report.p_max = 1.0 / (1.0 + order * report.q_min);
    report.entanglement_e = 1.0 - report.p_max;
    const double heavier = static_cast<double>(
        std::max(part.measured_order(sigma.dims()), part.unmeasured_order(sigma.dims())));
    report.threshold_p = 1.0 / (1.0 + heavier);
    report.measured_party = part.measured();
    report.ppt_scope = ppt_scope_label(sigma.dims(), part);
    if (report.q_min < 1e-9)
        report.warning = "q_min below 1e-9: measured-party marginal is rank-deficient; "
                         "e = 0 does not certify separability across this cut";
    return report;
}

// Same report with both independent oracles filled in. samples = 0 skips the
// sampled-minimum oracle.
inline SeparabilityReport entanglement_measure_with_oracles(const DensityMatrix& sigma,
                                                            const Bipartition& part, int samples,
                                                            std::uint64_t seed) {
    SeparabilityReport report = entanglement_measure(sigma, part);
    report.oracle_ppt_verdict = ppt_check(sigma, part);
    if (samples > 0) report.oracle_qmin_sampled = q_min_sampled(sigma, part, samples, seed);
    return report;
}

// True iff rho lies within the absolute-separability ball around the
// normalized identity (boundary inclusive).
inline bool in_absolute_sep_ball(const DensityMatrix& rho, int n, int d) {
    if (n < 1) throw RangeError("in_absolute_sep_ball: need n >= 1");
    if (d < 2) throw RangeError("in_absolute_sep_ball: local dimension must be >= 2");
    const long order = detail::checked_power(d, n, "in_absolute_sep_ball");
    if (rho.order() != order)
        throw DimensionError("in_absolute_sep_ball: state order " + std::to_string(rho.order()) +
                             " does not equal d^n = " + std::to_string(order));
    const double dist = hs_distance(rho.matrix(), maximally_mixed(order));
    return dist <= absolute_sep_radius(n, d) + 1e-12;
}

} // namespace sepgeo
