// Schwinger spin frames, Bloch statistics, principal-axis analysis, and
// rotated mode operators.

#include "boson/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace boson {

namespace {

constexpr double kOrthogonalTol = 1e-9;

Eigen::Matrix3d rot_z(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix3d r;
    r << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
    return r;
}

Eigen::Matrix3d rot_y(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix3d r;
    r << c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c;
    return r;
}

double clamp_unit(double x) { return std::min(1.0, std::max(-1.0, x)); }

// One cyclic Jacobi rotation zeroing a(p, q); accumulates into v.
void jacobi_rotate(Eigen::Matrix3d& a, Eigen::Matrix3d& v, int p, int q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double phi = 0.5 * std::atan2(2.0 * apq, a(q, q) - a(p, p));
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    for (int k = 0; k < 3; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (int k = 0; k < 3; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    for (int k = 0; k < 3; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

double off_diagonal_sq(const Eigen::Matrix3d& a) {
    return a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
}

}  // namespace

SpinFrame spin_frame(const FockBasis& basis, int mode_a, int mode_b) {
    const ModeOperator raise = hop_op(basis, mode_a, mode_b);  // b' a
    const ModeOperator lower = hop_op(basis, mode_b, mode_a);  // a' b
    const ModeOperator na = hop_op(basis, mode_a, mode_a);
    const ModeOperator nb = hop_op(basis, mode_b, mode_b);
    const complex half_i{0.0, 0.5};
    ModeOperator sx = (0.5 * (raise + lower)).assume_hermitian();
    ModeOperator sy = ModeOperator(basis, half_i * (lower.matrix() - raise.matrix()), false)
                          .assume_hermitian();
    ModeOperator sz = (0.5 * (nb - na)).assume_hermitian();
    ModeOperator n_total = (na + nb).assume_hermitian();
    return SpinFrame{std::move(sx), std::move(sy), std::move(sz), std::move(n_total),
                     {mode_a, mode_b}};
}

SpinFrame collective_frame(const std::vector<SpinFrame>& frames) {
    if (frames.empty()) throw std::invalid_argument("collective_frame: no frames");
    SpinFrame total = frames.front();
    for (std::size_t i = 1; i < frames.size(); ++i) {
        const SpinFrame& f = frames[i];
        if (f.sx.basis() != total.sx.basis())
            throw std::invalid_argument("collective_frame: basis mismatch");
        total.sx = (total.sx + f.sx).assume_hermitian();
        total.sy = (total.sy + f.sy).assume_hermitian();
        total.sz = (total.sz + f.sz).assume_hermitian();
        total.n_total = (total.n_total + f.n_total).assume_hermitian();
    }
    total.mode_pair = {-1, -1};
    return total;
}

BlochReport bloch_and_covariance(const DensityOperator& rho, const SpinFrame& frame) {
    const std::array<const ModeOperator*, 3> ops{&frame.sx, &frame.sy, &frame.sz};
    std::array<Matrix, 3> products;
    BlochReport report;
    for (int i = 0; i < 3; ++i) {
        products[i] = ops[i]->matrix() * rho.matrix();
        report.mean(i) = products[i].trace().real();
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            // Tr(S_i S_j rho) from the cached right-products: sum over the
            // elementwise product of S_i and (S_j rho)^T.
            const complex moment =
                (ops[i]->matrix().array() * products[j].transpose().array()).sum();
            const double sym = moment.real() - report.mean(i) * report.mean(j);
            report.cov(i, j) = sym;
            report.cov(j, i) = sym;
        }
    }
    return report;
}

BlochReport bloch_and_covariance(const StateVector& psi, const SpinFrame& frame) {
    const std::array<const ModeOperator*, 3> ops{&frame.sx, &frame.sy, &frame.sz};
    std::array<Vector, 3> images;
    BlochReport report;
    for (int i = 0; i < 3; ++i) {
        images[i] = ops[i]->matrix() * psi.amps();
        report.mean(i) = psi.amps().dot(images[i]).real();
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            const double moment = images[i].dot(images[j]).real();
            const double sym = moment - report.mean(i) * report.mean(j);
            report.cov(i, j) = sym;
            report.cov(j, i) = sym;
        }
    }
    return report;
}

Eigen::Matrix3d zyz_rotation(double alpha, double beta, double gamma) {
    return rot_z(alpha) * rot_y(beta) * rot_z(gamma);
}

Eigen::Matrix3d euler_to_spin_rotation(double alpha, double beta, double gamma) {
    return zyz_rotation(-alpha, -beta, -gamma).transpose();
}

SpinFrame rotated_frame(const SpinFrame& frame, const Eigen::Matrix3d& m) {
    if ((m * m.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() >
        kOrthogonalTol)
        throw std::invalid_argument("rotated_frame: matrix is not orthogonal");
    const std::array<const ModeOperator*, 3> ops{&frame.sx, &frame.sy, &frame.sz};
    std::array<ModeOperator, 3> rotated{frame.sx, frame.sy, frame.sz};
    for (int xi = 0; xi < 3; ++xi) {
        Matrix acc = Matrix::Zero(frame.sx.matrix().rows(), frame.sx.matrix().cols());
        for (int mu = 0; mu < 3; ++mu) acc += m(xi, mu) * ops[mu]->matrix();
        rotated[xi] = ModeOperator(frame.sx.basis(), std::move(acc), false).assume_hermitian();
    }
    return SpinFrame{std::move(rotated[0]), std::move(rotated[1]), std::move(rotated[2]),
                     frame.n_total, frame.mode_pair};
}

PrincipalFrame principal_axes(const BlochReport& report, const SpinFrame& frame) {
    Eigen::Matrix3d a = 0.5 * (report.cov + report.cov.transpose());
    Eigen::Matrix3d v = Eigen::Matrix3d::Identity();
    for (int sweep = 0; sweep < 50 && off_diagonal_sq(a) > 1e-30; ++sweep) {
        jacobi_rotate(a, v, 0, 1);
        jacobi_rotate(a, v, 0, 2);
        jacobi_rotate(a, v, 1, 2);
    }

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&a](int lhs, int rhs) { return a(lhs, lhs) < a(rhs, rhs); });

    Eigen::Vector3d variances;
    Eigen::Matrix3d rotation;
    for (int col = 0; col < 3; ++col) {
        variances(col) = std::max(0.0, a(order[col], order[col]));
        rotation.col(col) = v.col(order[col]);
    }

    // Gauge: the largest-magnitude entry of each column is made positive;
    // a residual det of -1 is absorbed into the axis of largest variance.
    for (int col = 0; col < 3; ++col) {
        int arg = 0;
        rotation.col(col).cwiseAbs().maxCoeff(&arg);
        if (rotation(arg, col) < 0.0) rotation.col(col) *= -1.0;
    }
    if (rotation.determinant() < 0.0) rotation.col(2) *= -1.0;

    const Eigen::Matrix3d& r = rotation;
    const double beta = std::acos(clamp_unit(r(2, 2)));
    double alpha = 0.0;
    double gamma = 0.0;
    if (std::sin(beta) > 1e-12) {
        alpha = std::atan2(r(1, 2), r(0, 2));
        gamma = std::atan2(r(2, 1), -r(2, 0));
    } else if (r(2, 2) > 0.0) {
        alpha = std::atan2(r(1, 0), r(0, 0));  // beta = 0: only alpha+gamma fixed
    } else {
        alpha = std::atan2(-r(1, 0), -r(0, 0));  // beta = pi: only alpha-gamma fixed
    }
    return PrincipalFrame{variances, rotation, {alpha, beta, gamma},
                          rotated_frame(frame, rotation.transpose())};
}

std::pair<ModeOperator, ModeOperator> new_mode_ops(const FockBasis& basis, int mode_a,
                                                   int mode_b,
                                                   const std::array<double, 3>& euler) {
    const double alpha = euler[0];
    const double beta = euler[1];
    const double gamma = euler[2];
    const ModeOperator a = annihilation_op(basis, mode_a);
    const ModeOperator b = annihilation_op(basis, mode_b);
    const complex phase_a = std::polar(1.0, 0.5 * alpha);
    const complex phase_b = std::polar(1.0, -0.5 * alpha);
    const complex phase_c = std::polar(1.0, 0.5 * gamma);
    const complex phase_d = std::polar(1.0, -0.5 * gamma);
    const double cb = std::cos(0.5 * beta);
    const double sb = std::sin(0.5 * beta);
    ModeOperator c = (phase_c * phase_a * cb) * a + (phase_c * phase_b * sb) * b;
    ModeOperator d = (phase_d * phase_a * -sb) * a + (phase_d * phase_b * cb) * b;
    return {std::move(c), std::move(d)};
}

double jx_variance_via_correlations(const DensityOperator& rho, const ModeOperator& c,
                                    const ModeOperator& d) {
    const ModeOperator cd = c.adjoint() * d;   // c' d
    const ModeOperator dc = d.adjoint() * c;   // d' c
    const complex e_dc = expectation(rho, dc);
    const complex e_cd = expectation(rho, cd);
    const complex e_dc2 = expectation(rho, dc * dc);                  // d'^2 c^2 (normal order)
    const complex e_cd2 = expectation(rho, cd * cd);                  // c'^2 d^2
    const complex e_cross = expectation(rho, d.adjoint() * (c.adjoint() * (c * d)));
    const complex e_nd = expectation(rho, d.adjoint() * d);
    const complex e_nc = expectation(rho, c.adjoint() * c);
    const complex second = 0.25 * (e_dc2 + e_cd2 + 2.0 * e_cross + e_nd + e_nc);
    const complex first = 0.25 * (e_dc * e_dc + e_cd * e_cd + 2.0 * e_dc * e_cd);
    return second.real() - first.real();
}

}  // namespace boson
