// Particle-number super-selection-rule diagnostics and constructions:
// compliance checks against a number operator, exact U(1) twirling (sector
// dephasing), separable-state assembly and seeded random sampling, the
// reference-internalization map, and the shared-qubit mixture that shows a
// local-coherence qubit pair cannot obey the global rule for any amplitudes.
#pragma once

#include "boson/fock.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace boson {

// Weighted separable (non-entangled) ensemble: rho = sum_R P_R (x)_X rho_R^X.
// `subsystems` partitions the full mode list into contiguous ascending
// blocks; components[R][X] lives on the product basis of block X.
struct SeparableSpec {
    std::vector<double> weights;
    std::vector<std::vector<DensityOperator>> components;
    std::vector<std::vector<int>> subsystems;
};

struct SsrReport {
    double defect = 0.0;  // max-abs entry of [N, rho]
    bool compliant = false;
    std::map<long long, double> sector_populations;
};

// Defect and sector populations of rho against a diagonal number operator;
// compliant when the defect is below 1e-10.
SsrReport ssr_check(const DensityOperator& rho, const ModeOperator& number_operator);

// Exact U(1) group average: zeroes every element connecting different
// eigenvalues of the (diagonal) number operator. Idempotent, trace- and
// positivity-preserving.
DensityOperator twirl(const DensityOperator& rho, const ModeOperator& number_operator);

// Assembles sum_R P_R (x)_X rho_R^X on the tensor-product basis of the
// subsystem bases. Validates weights (nonnegative, unit sum) and shape.
DensityOperator separable_state(const SeparableSpec& spec);

enum class SampleMode {
    local_ssr,      // each factor is a subsystem-number-dephased random state
    pair_fixed_n,   // two-mode blocks, each factor a random fixed-N pure state
    one_boson_pair, // two-mode cutoff-1 blocks, one boson per pair
    unrestricted,   // full random densities (no SSR constraint)
};

struct SampleConfig {
    int n_components = 1;
    std::vector<std::vector<int>> subsystems;  // contiguous ascending blocks
    std::vector<int> cutoffs;                  // per mode of the full basis
    SampleMode mode = SampleMode::local_ssr;
};

// Deterministic in the seed; see SampleMode for the per-factor ensembles.
SeparableSpec sample_separable(std::uint64_t seed, const SampleConfig& config);

// Entangles a single-mode system state sum_m C_m |m> with a reference mode:
// |Psi> = sum_m C_m |m>_S |n_ref - m>_R. Returns the joint pure state and
// the reduced system state sum_m |C_m|^2 |m><m| (number-diagonal).
std::pair<StateVector, DensityOperator> internalize_reference(const StateVector& system,
                                                              int n_ref);

// Equal mixture of |+>_A (x) (alpha|0> + beta|1>)_B and
// |->_A (x) (-beta*|0> + alpha*|1>)_B on two cutoff-1 modes, with its global
// SSR report: the mixture retains an N=0 <-> N=2 coherence of magnitude
// |alpha beta*|/2 for every admissible (alpha, beta).
std::pair<DensityOperator, SsrReport> shared_qubit_mixture(complex alpha, complex beta);

}  // namespace boson
