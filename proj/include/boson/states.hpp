// Constructors for the named states used throughout the suite, each defined
// by an exact amplitude/matrix-element formula:
//
//  - Glauber coherent state and the phase-averaged two-mode coherent mixture.
//  - Two-mode NOON, binomial and relative-phase states on fixed-N sector
//    bases; the latter two carry a designated z-y-z Euler frame in their
//    NamedState params ("euler_alpha"/"euler_beta"/"euler_gamma") giving the
//    rotated spin frame in which their closed-form moment tables apply.
//  - One-boson and two-boson Bell states, the three-qubit GHZ state, and the
//    four-superposition two-mode mixture (verstraete).
#pragma once

#include "boson/fock.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace boson {

struct NamedState {
    std::string label;
    std::variant<StateVector, DensityOperator> state;
    std::map<std::string, double> params;

    bool is_pure() const { return std::holds_alternative<StateVector>(state); }
    const FockBasis& basis() const;
    const StateVector& vector() const;  // throws std::invalid_argument when mixed
    DensityOperator density() const;    // projector for pure states
};

// Smallest cutoff satisfying the coherent-state truncation rule
// n_max >= ceil(|alpha|^2 + 8|alpha| + 10).
int coherent_cutoff(double abs_alpha);

// Glauber coherent state, amplitudes C_n = exp(-|alpha|^2/2) alpha^n/sqrt(n!).
// Throws std::invalid_argument when the truncated tail (norm deficit) is not
// below 1e-10, i.e. when n_max is too small for |alpha|.
StateVector coherent_state(complex alpha, int n_max);

// Phase-averaged product of two equal-amplitude coherent states, built
// analytically: <n,p|rho|m,q> =
// exp(-2|alpha|^2) |alpha|^{n+m+p+q} delta_{n+p,m+q} / sqrt(n! m! p! q!).
DensityOperator mixed_two_mode_coherent(double abs_alpha, int n_max);

// cos(theta)|N,0> + sin(theta)|0,N> on the two-mode fixed-N sector.
StateVector noon_state(int n_bosons, double theta);

// N-fold application of the rotated creation operator to the vacuum,
// expanded on the two-mode fixed-N sector:
// amp(k) = sqrt(C(N,k)) cos^k(theta) sin^{N-k}(theta) e^{-i chi (2k-N)/2}.
// Its designated Euler frame is (-pi + chi, -2 theta, -pi).
StateVector binomial_state(int n_bosons, double theta, double chi);

// Relative-phase eigenstate: amp(n_a) = e^{i (N/2 - n_a) theta_p}/sqrt(N+1)
// with theta_p = 2 pi p/(N+1); integer p with 2|p| <= N. Its designated
// Euler frame is (-pi + theta_p, -pi/2, -pi).
StateVector relative_phase_state(int n_bosons, int p);

// The fixed catalog of Bell and GHZ states:
//  - bell_one_boson, variant 0/1: (|0,1> +/- |1,0>)/sqrt(2) on two modes.
//  - bell_two_boson, variant 0..3 on four modes (a+, a-, b+, b-):
//    0 singlet (|1,0,0,1>-|0,1,1,0>)/sqrt(2); 1 triplet m=-1 |0,1,0,1>;
//    2 triplet m=0 (|1,0,0,1>+|0,1,1,0>)/sqrt(2); 3 triplet m=+1 |1,0,1,0>.
//  - ghz: (|1,1,1>+|0,0,0>)/sqrt(2) on three cutoff-1 modes
//    (occupancy 1 encodes the +1 qubit level).
std::vector<NamedState> bell_and_ghz();

// Equal mixture over omega in {1, i, -1, -i} of the two-mode product
// |psi_w><psi_w| (x) |psi_w><psi_w| with |psi_w> = (|0> + w|1>)/sqrt(2);
// obeys the global particle-number superselection rule while every component
// violates the local one.
DensityOperator verstraete_state();

// Factory used by the CLI: builds any catalog state from its label and
// parameter map, attaching designated Euler frames where defined. Throws
// std::invalid_argument for unknown labels or missing/invalid parameters.
//
// Labels and parameters:
//   fock (n [, cutoff]), coherent (abs_alpha), mixed_two_mode_coherent
//   (abs_alpha), noon (N, theta), binomial (N, theta, chi), relative_phase
//   (N, p), bell_one_boson (variant), bell_two_boson (variant), verstraete,
//   ghz.
NamedState named_state(const std::string& label, const std::map<std::string, double>& params);

}  // namespace boson
