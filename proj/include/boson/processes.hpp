// Dynamical toy processes: a two-pulse atom-molecule conversion sequence in
// both its closed-form two-level (Fock) reduction and its full three-mode
// Hamiltonian form, a single-particle two-mode interferometer fed with a
// vacuum superposition, and the phase-state clock overlap.

#pragma once

#include "boson/fock.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boson {

struct ProcessResult {
    DensityOperator final_state;
    std::map<std::string, double> observables;
    std::vector<std::pair<std::string, double>> stages;  // (label, duration/phase)
};

// Two-level reduction of the conversion sequence: for a reservoir of n
// bosons the resonant coupling closes on {atom, molecule} pairs with Rabi
// coupling kappa sqrt(n) / 2, so the exact 50/50 pulse lasts
// pi / (2 kappa sqrt(n)).  Pulse, free phase phi on the molecule amplitude,
// pulse; tracing the reservoir leaves the diagonal mixture
// sin^2(phi/2) |atom> + cos^2(phi/2) |molecule>, independent of n.
ProcessResult dowling_fock(int n_reservoir, double phi, double kappa);

// Full three-mode evolution (modes: atom, molecule, reservoir) under
// H = (kappa/2)(m^dag a r + h.c.) with the reservoir prepared coherently at
// mean n_bec, free stage exp(-i delta tau n_m), and a second pulse.  The
// weighted total 2 n_m + n_a + n_r is conserved exactly; the reduced
// atom-molecule populations approach the two-level result as n_bec grows.
// cutoffs = {atom, molecule, reservoir} occupation cutoffs.
ProcessResult dowling_full(int n_bec, double kappa, double delta, double tau,
                           const std::vector<int>& cutoffs);

// 50/50 beam splitter, relative phase delta*tau on the second arm, second
// beam splitter; input alpha |0> + beta |1> in the first arm (or the
// corresponding mixture when mixed_input).  Reports the single-atom
// detection probabilities p_10 = |beta|^2 sin^2(delta tau / 2) and
// p_01 = |beta|^2 cos^2(delta tau / 2).
ProcessResult vacuum_interferometer(complex alpha, complex beta, double delta,
                                    double tau, bool mixed_input);

// Probability |<theta_q| exp(-i n omega_dt) |theta_p>|^2 for the uniform
// phase states theta_k = 2 pi k / (n_max + 1) on occupations 0..n_max,
// evaluated in closed form (Dirichlet kernel) with a guarded small-angle
// branch.
double clock_phase_probability(int n_max, int p, int q, double omega_dt);

}  // namespace boson
