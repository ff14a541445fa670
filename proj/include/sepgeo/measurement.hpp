// measurement.hpp — local projective measurement: embed a rank-1 projector on
// one party with identity on the rest, compute the outcome probability and
// the normalized reduced state of the unmeasured party.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepgeo/states.hpp"

namespace sepgeo {

// Below this outcome probability the reduced state is declared undefined
// rather than normalized by a near-zero trace.
inline constexpr double kZeroProbability = 1e-12;

// Split of subsystem indices into a measured party A and an unmeasured
// party B. Both parties are non-empty and together cover 0..n-1.
class Bipartition {
public:
    Bipartition(const std::set<int>& measured, int subsystem_count)
        : subsystem_count_(subsystem_count) {
        if (subsystem_count < 2)
            throw InvalidPartition("Bipartition: need at least two subsystems");
        if (measured.empty())
            throw InvalidPartition("Bipartition: measured party is empty");
        for (int k : measured)
            if (k < 0 || k >= subsystem_count)
                throw InvalidPartition("Bipartition: subsystem index " + std::to_string(k) +
                                       " out of range for " + std::to_string(subsystem_count) +
                                       " subsystems");
        measured_.assign(measured.begin(), measured.end());
        for (int k = 0; k < subsystem_count; ++k)
            if (!measured.count(k)) unmeasured_.push_back(k);
        if (unmeasured_.empty())
            throw InvalidPartition("Bipartition: unmeasured party is empty");
    }

    int subsystem_count() const { return subsystem_count_; }
    const std::vector<int>& measured() const { return measured_; }    // ascending
    const std::vector<int>& unmeasured() const { return unmeasured_; }  // ascending

    SubsystemDims measured_dims(const SubsystemDims& dims) const {
        return detail::select_dims(dims, measured_);
    }
    SubsystemDims unmeasured_dims(const SubsystemDims& dims) const {
        return detail::select_dims(dims, unmeasured_);
    }
    long measured_order(const SubsystemDims& dims) const { return measured_dims(dims).order(); }
    long unmeasured_order(const SubsystemDims& dims) const { return unmeasured_dims(dims).order(); }

private:
    int subsystem_count_;
    std::vector<int> measured_;
    std::vector<int> unmeasured_;
};

struct MeasurementOutcome {
    double probability = 0.0;
    // trace of the unnormalized post-measurement operator; equals probability
    double raw_trace = 0.0;
    // absent when probability <= kZeroProbability
    std::optional<DensityMatrix> reduced_state;

    const DensityMatrix& reduced() const {
        if (!reduced_state)
            throw ZeroProbabilityError("MeasurementOutcome: outcome probability " +
                                       std::to_string(probability) +
                                       " is below threshold; reduced state undefined");
        return *reduced_state;
    }
};

namespace detail {

inline void check_partition_fits(const SubsystemDims& dims, const Bipartition& part,
                                 const char* where) {
    if (part.subsystem_count() != dims.count())
        throw DimensionError(std::string(where) + ": bipartition covers " +
                             std::to_string(part.subsystem_count()) + " subsystems but state has " +
                             std::to_string(dims.count()));
}

} // namespace detail

// Build M = P_A (x) I_B in the state's own subsystem ordering: the projector
// onto `target` acts on the measured party, identity on the rest. For
// non-contiguous measured indices the operator is assembled measured-first
// and permuted back through the mixed-radix index bijection.
inline Matrix embed_measured_projector(const PureKet& target, const SubsystemDims& dims,
                                       const Bipartition& part) {
    detail::check_partition_fits(dims, part, "embed_measured_projector");
    if (target.dim() != part.measured_order(dims))
        throw DimensionError("embed_measured_projector: target dimension " +
                             std::to_string(target.dim()) + " does not match measured party order " +
                             std::to_string(part.measured_order(dims)));

    std::vector<int> front_perm = part.measured();
    front_perm.insert(front_perm.end(), part.unmeasured().begin(), part.unmeasured().end());

    std::vector<int> perm_dims;
    perm_dims.reserve(front_perm.size());
    for (int k : front_perm) perm_dims.push_back(dims.dim(k));

    const Matrix front = kron(target.projector(), identity(part.unmeasured_order(dims)));
    bool already_ordered = true;
    for (std::size_t k = 0; k < front_perm.size(); ++k)
        if (front_perm[k] != static_cast<int>(k)) { already_ordered = false; break; }
    if (already_ordered) return front;  // measured party occupies the leading slots
    return permute_subsystems(front, SubsystemDims(perm_dims), inverse_permutation(front_perm));
}

// Project the measured party onto `target` (identity on the rest): computes
// rho' = M rho M†, the outcome probability Tr(rho'), and the normalized
// reduced state of the unmeasured party when the probability is nonzero.
inline MeasurementOutcome local_project(const DensityMatrix& rho, const PureKet& target,
                                        const Bipartition& part) {
    detail::check_partition_fits(rho.dims(), part, "local_project");
    const Matrix op = embed_measured_projector(target, rho.dims(), part);
    const Matrix post = op * rho.matrix() * op.adjoint();

    MeasurementOutcome outcome;
    outcome.raw_trace = post.trace().real();
    outcome.probability = outcome.raw_trace > 0.0 ? outcome.raw_trace : 0.0;
    if (outcome.probability > kZeroProbability) {
        const std::set<int> traced(part.measured().begin(), part.measured().end());
        Matrix reduced = partial_trace(post, rho.dims(), traced) / outcome.probability;
        outcome.reduced_state.emplace(std::move(reduced), part.unmeasured_dims(rho.dims()));
    }
    return outcome;
}

// Measure the first qudit of the n-qudit Werner state. The probability is
// 1/d for every target, and the reduced state sits at distance
// p * sqrt((d^{n-1}-1)/d^{n-1}) from the normalized identity.
inline MeasurementOutcome werner_post_measurement(int n, int d, double p, const PureKet& target) {
    const DensityMatrix rho = werner(n, d, p);
    const Bipartition part({0}, n);
    return local_project(rho, target, part);
}

// Outcomes for `samples` Haar-random targets drawn from a stream seeded once;
// deterministic for a fixed seed. Zero-probability outcomes are recorded with
// absent reduced_state, never dropped.
inline std::vector<MeasurementOutcome> measurement_sweep(const DensityMatrix& rho,
                                                         const Bipartition& part, int samples,
                                                         std::uint64_t seed) {
    if (samples < 1) throw RangeError("measurement_sweep: need at least one sample");
    detail::check_partition_fits(rho.dims(), part, "measurement_sweep");
    const int target_dim = static_cast<int>(part.measured_order(rho.dims()));
    GaussianSource source(seed);
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k)
        outcomes.push_back(local_project(rho, random_pure(target_dim, source), part));
    return outcomes;
}

} // namespace sepgeo
