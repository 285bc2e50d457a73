// Entanglement tests with structured verdicts: spin-squeezing reports,
// variance- and correlation-based mode tests, the quadrature (Duan-type)
// test, collective-spin (Sorensen-type) tests, pair-mode tests, CHSH, and
// the three-qubit parity contradiction with hidden-variable assignments.
//
// Every test returns a WitnessVerdict carrying both sides of its inequality
// and a trigger flag.  Strict inequalities are guarded by a 1e-9 band so
// exact ties (e.g. the vacuum saturating the quadrature bound) never count
// as violations.  Tests whose premise fails (e.g. a vanishing in-plane Bloch
// vector) come back with applicable=false instead of throwing.
//
// The variance-based tests take their moments in the state's ambient basis.
// On a product basis a state that fills a mode to its cutoff loses hop and
// quadrature second moments through the clipped top level, so give such
// states headroom first (pad_density with cutoff + 2); witness_battery does
// this itself.  Fixed-total sector bases close under hops and need no
// padding.

#pragma once

#include "boson/fock.hpp"
#include "boson/spin.hpp"
#include "boson/states.hpp"

#include <array>
#include <string>
#include <vector>

namespace boson {

struct WitnessVerdict {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // always rhs - lhs; the direction sits in paper_eq
    bool triggered = false;
    bool applicable = true;
    std::string paper_eq;  // human-readable form of the tested inequality
};

// All twelve frame-based squeezing verdicts: the six pairwise tests
// Var(J_xi) < |<J_zeta>|/2, the three tests against the full orthogonal
// in-plane mean, the xi^2 squeezing quotient, and the planar pair.  Axis
// names in the verdicts refer to the supplied frame's axes.
std::vector<WitnessVerdict> spin_squeezing_report(const DensityOperator& rho,
                                                  const SpinFrame& frame);
std::vector<WitnessVerdict> spin_squeezing_report(const DensityOperator& rho,
                                                  const PrincipalFrame& frame);

// Var(Sx) + Var(Sy) < <N>/2 in the supplied frame.
WitnessVerdict hillery_variance_test(const DensityOperator& rho, const SpinFrame& frame);

// |<a^m bdag^n>|^2 against either the normally ordered correlation
// <adag^m a^m bdag^n b^n> (ssr_mode=false) or zero (ssr_mode=true).  On
// fixed-total bases the cross moment vanishes identically unless m == n,
// where the operator reduces to the m-th power of the hop product.
WitnessVerdict hillery_correlation_test(const DensityOperator& rho, int mode_a,
                                        int mode_b, int m, int n, bool ssr_mode);

// <Sx>^2 + <Sy>^2 > 0: any in-plane Bloch component certifies cross-mode
// coherence, which local particle-number superselection forbids.
WitnessVerdict bloch_coherence_test(const DensityOperator& rho, const SpinFrame& frame);

// Var(x_A + x_B) + Var(p_A - p_B) < 2.  On fixed-total bases every
// number-changing term has zero expectation and the sum reduces exactly to
// 2<N> + 2, which is what this computes there.
WitnessVerdict duan_test(const DensityOperator& rho, int mode_a, int mode_b);

// Var(Sz) < (<Sx>^2 + <Sy>^2) / <N>.  Inapplicable when the in-plane mean
// square is below 1e-12.
WitnessVerdict sorensen_test(const DensityOperator& rho, const SpinFrame& frame);

// Four-mode state partitioned into pairs A = {0,1}, B = {2,3}: the
// pair-spin correlation test |<S+A S-B>|^2 > <S+A S-A S+B S-B> plus the
// four single-mode cross-pair correlation tests at m = n = 1.
std::vector<WitnessVerdict> pair_mode_tests(const DensityOperator& rho);

// |E11 + E12 + E21 - E22| > 2 with E_ij = Re tr(rho A_i B_j).  Preconditions:
// every observable Hermitian with spectrum in [-1, 1], and each A commutes
// with each B.
WitnessVerdict chsh_value(const DensityOperator& rho, const ModeOperator& a1,
                          const ModeOperator& a2, const ModeOperator& b1,
                          const ModeOperator& b2);

// Var(Sx) + Var(Sy) >= |<Sz>| holds for every state, so the converse
// "test" can never fire; it is reported only to document that negative
// result.
WitnessVerdict universal_variance_bound(const DensityOperator& rho,
                                        const SpinFrame& frame);

// Parity bookkeeping for the three-qubit contradiction: the four measured
// parity expectations (x y y, y x y, y y x, x x x), their targets
// (-1, -1, -1, +1), the worst residual, and the number of the 2^9
// deterministic +/-1 assignments that reproduce all four signs (zero).
struct GhzHvtReport {
    std::array<double, 4> measured_parities{};
    std::array<double, 4> target_parities{};
    double max_residual = 0.0;
    int consistent_assignments = 0;
    int total_assignments = 0;
};

GhzHvtReport ghz_hvt_contradiction();

// The full battery for a catalog state: picks the analysis frame (the
// state's designated Euler frame when present, the principal frame
// otherwise), then emits every applicable test.  Single-mode states yield
// an empty report.
std::vector<WitnessVerdict> witness_battery(const NamedState& state);

}  // namespace boson
