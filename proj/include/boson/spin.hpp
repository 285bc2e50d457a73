// Schwinger spin machinery for a pair of bosonic modes: spin operator
// frames, Bloch vectors with covariance matrices, principal-axis
// diagonalization (deterministic 3x3 cyclic Jacobi), z-y-z Euler rotations,
// and the rotated mode operators that realize a rotated spin frame.
//
// Rotation conventions:
//  - zyz_rotation(a, b, g) = Rz(a) * Ry(b) * Rz(g) acting on real 3-vectors.
//  - A rotated spin frame J relates to the source frame S through a
//    direction-cosine matrix, J_xi = sum_mu M_xi,mu S_mu. For new mode
//    operators built with Euler angles (a, b, g) the matrix is
//    M(a, b, g) = zyz_rotation(-a, -b, -g)^T, derived from the mode algebra
//    and validated in the test suite by operator round-trips.
//  - PrincipalFrame.euler factorizes PrincipalFrame.rotation itself as
//    Rz(alpha) Ry(beta) Rz(gamma) with beta in [0, pi]; the matching
//    new_mode_ops angles are therefore (-alpha, -beta, -gamma).
#pragma once

#include "boson/fock.hpp"

#include <array>
#include <utility>

namespace boson {

struct SpinFrame {
    ModeOperator sx, sy, sz;
    ModeOperator n_total;
    std::pair<int, int> mode_pair;
};

struct BlochReport {
    Eigen::Vector3d mean;   // (<S_x>, <S_y>, <S_z>)
    Eigen::Matrix3d cov;    // symmetrized second moments minus mean products
};

struct PrincipalFrame {
    Eigen::Vector3d variances;     // ascending: Var(J_x) <= Var(J_y) <= Var(J_z)
    Eigen::Matrix3d rotation;      // orthogonal, det +1; rotation^T cov rotation diagonal
    std::array<double, 3> euler;   // (alpha, beta, gamma), z-y-z, beta in [0, pi]
    SpinFrame j_frame;             // J_xi = sum_mu (rotation^T)_xi,mu S_mu
};

// S_x = (b'a + a'b)/2, S_y = (b'a - a'b)/(2i), S_z = (n_b - n_a)/2 and the
// pair number operator, built from number-conserving hops so the frame is
// available on fixed-N sector bases as well.
SpinFrame spin_frame(const FockBasis& basis, int mode_a, int mode_b);

// Collective frame: componentwise sum of the given frames (disjoint pairs on
// a common basis).
SpinFrame collective_frame(const std::vector<SpinFrame>& frames);

BlochReport bloch_and_covariance(const DensityOperator& rho, const SpinFrame& frame);
BlochReport bloch_and_covariance(const StateVector& psi, const SpinFrame& frame);

// Rz(a) Ry(b) Rz(g).
Eigen::Matrix3d zyz_rotation(double alpha, double beta, double gamma);

// Direction-cosine matrix M with J = M S for new modes built at these Euler
// angles: M = zyz_rotation(-alpha, -beta, -gamma)^T.
Eigen::Matrix3d euler_to_spin_rotation(double alpha, double beta, double gamma);

// J_xi = sum_mu M_xi,mu S_mu; requires M orthogonal (checked to 1e-9).
SpinFrame rotated_frame(const SpinFrame& frame, const Eigen::Matrix3d& m);

// Diagonalizes report.cov by cyclic Jacobi with a deterministic gauge: each
// eigenvector column has its largest-|entry| component positive, and if the
// gauged matrix has det -1 the third column is negated to restore a proper
// rotation. Eigenvalues ascending; ties broken by the gauge itself.
PrincipalFrame principal_axes(const BlochReport& report, const SpinFrame& frame);

// Rotated mode operators at the given (alpha, beta, gamma):
//   c = e^{+i g/2} ( cos(b/2) e^{+i a/2} a + sin(b/2) e^{-i a/2} b)
//   d = e^{-i g/2} (-sin(b/2) e^{+i a/2} a + cos(b/2) e^{-i a/2} b)
// Product bases only (single-mode ladders do not preserve a sector).
std::pair<ModeOperator, ModeOperator> new_mode_ops(const FockBasis& basis, int mode_a,
                                                   int mode_b,
                                                   const std::array<double, 3>& euler);

// Evaluates Var(J_x) for J_x = (d'c + c'd)/2 from the six first/second-order
// correlation expectations:
//   1/4 (<d'^2 c^2> + <c'^2 d^2> + 2<d'c'cd> + <d'd> + <c'c>)
// - 1/4 (<d'c>^2 + <c'd>^2 + 2<d'c><c'd>).
double jx_variance_via_correlations(const DensityOperator& rho, const ModeOperator& c,
                                    const ModeOperator& d);

}  // namespace boson
