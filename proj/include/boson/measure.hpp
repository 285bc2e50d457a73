// Projective measurement machinery: spectral projector families, outcome and
// joint probabilities, post-measurement (conditioned) states, conditional
// means/variances, and the unrecorded-measurement channel. Quadrature
// observables are provided here as the truncated-matrix surrogate for
// continuous position/momentum measurements.
#pragma once

#include "boson/fock.hpp"

#include <utility>

namespace boson {

struct ProjectorOutcome {
    double eigenvalue;
    ModeOperator projector;
};

// Complete family of orthogonal projectors resolving a Hermitian observable;
// constructed via spectral_projectors, which validates completeness,
// idempotence, orthogonality (1e-10) and reconstruction (1e-9).
struct ProjectorFamily {
    ModeOperator observable;
    std::vector<ProjectorOutcome> outcomes;  // ascending eigenvalue
};

// Spectral decomposition with single-linkage clustering of eigenvalues:
// eigenvalues closer than degeneracy_tol share one projector, whose reported
// eigenvalue is the cluster mean. Requires the Hermitian hint.
ProjectorFamily spectral_projectors(const ModeOperator& observable,
                                    double degeneracy_tol = 1e-9);

// P = Tr(Pi rho), clamped into [0, 1].
double outcome_probability(const DensityOperator& rho, const ModeOperator& projector);

// Pi rho Pi / P; throws std::invalid_argument when P vanishes.
DensityOperator conditioned_state(const DensityOperator& rho, const ModeOperator& projector);

// A projector acting on a subset of modes, already embedded on the full
// basis; `modes` records the subsystem for disjointness checks.
struct SubsystemProjector {
    std::vector<int> modes;
    ModeOperator projector;
};

// Tr(Pi_A Pi_B ... rho) over pairwise disjoint subsystems.
double joint_probability(const DensityOperator& rho,
                         const std::vector<SubsystemProjector>& projectors);

// P(target | given) = P(target and given) / P(given).
double conditional_probability(const DensityOperator& rho, const SubsystemProjector& target,
                               const SubsystemProjector& given);

// Mean and variance of `observable` in the state conditioned on the family
// outcome at `outcome_index`.
std::pair<double, double> conditional_mean_variance(const DensityOperator& rho,
                                                    const ModeOperator& observable,
                                                    const ProjectorFamily& measured,
                                                    int outcome_index);

// Measurement performed but the outcome discarded: sum_j Pi_j rho Pi_j.
DensityOperator unrecorded_state(const DensityOperator& rho, const ProjectorFamily& family);

// x = (a + a')/sqrt(2), p = (a - a')/(sqrt(2) i); product bases only.
ModeOperator position_op(const FockBasis& basis, int mode);
ModeOperator momentum_op(const FockBasis& basis, int mode);

}  // namespace boson
