// Projective measurement implementation.

#include "boson/measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace boson {

namespace {

constexpr double kFamilyTol = 1e-10;
constexpr double kReconstructTol = 1e-9;
constexpr double kZeroProbability = 1e-14;

void validate_family(const ProjectorFamily& family) {
    const int dim = family.observable.basis().dim();
    Matrix sum = Matrix::Zero(dim, dim);
    Matrix reconstructed = Matrix::Zero(dim, dim);
    for (const ProjectorOutcome& outcome : family.outcomes) {
        const Matrix& p = outcome.projector.matrix();
        if (max_abs(p * p - p) > kFamilyTol)
            throw invariant_error("ProjectorFamily: projector is not idempotent");
        sum += p;
        reconstructed += outcome.eigenvalue * p;
    }
    if (max_abs(sum - Matrix::Identity(dim, dim)) > kFamilyTol)
        throw invariant_error("ProjectorFamily: projectors do not sum to identity");
    for (std::size_t i = 0; i < family.outcomes.size(); ++i)
        for (std::size_t j = i + 1; j < family.outcomes.size(); ++j)
            if (max_abs(family.outcomes[i].projector.matrix() *
                        family.outcomes[j].projector.matrix()) > kFamilyTol)
                throw invariant_error("ProjectorFamily: projectors are not orthogonal");
    if (max_abs(reconstructed - family.observable.matrix()) > kReconstructTol)
        throw invariant_error("ProjectorFamily: spectral reconstruction failed");
}

void check_disjoint(const std::vector<SubsystemProjector>& projectors) {
    std::set<int> seen;
    for (const SubsystemProjector& sp : projectors) {
        if (sp.modes.empty())
            throw std::invalid_argument("joint_probability: empty subsystem");
        for (int mode : sp.modes)
            if (!seen.insert(mode).second)
                throw std::invalid_argument("joint_probability: overlapping subsystems");
    }
}

}  // namespace

ProjectorFamily spectral_projectors(const ModeOperator& observable, double degeneracy_tol) {
    if (!observable.hermitian_hint())
        throw std::invalid_argument("spectral_projectors: observable must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(observable.matrix());
    const Eigen::VectorXd values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();

    ProjectorFamily family{observable, {}};
    const int dim = observable.basis().dim();
    int start = 0;
    while (start < dim) {
        int end = start + 1;
        // Single-linkage: extend the cluster while consecutive gaps stay
        // within the tolerance.
        while (end < dim && values(end) - values(end - 1) <= degeneracy_tol) ++end;
        const int count = end - start;
        const Matrix block = vectors.middleCols(start, count);
        const double eigenvalue = values.segment(start, count).mean();
        family.outcomes.push_back(
            {eigenvalue,
             ModeOperator(observable.basis(), block * block.adjoint(), true)});
        start = end;
    }
    validate_family(family);
    return family;
}

double outcome_probability(const DensityOperator& rho, const ModeOperator& projector) {
    const double p = expectation(rho, projector).real();
    return std::clamp(p, 0.0, 1.0);
}

DensityOperator conditioned_state(const DensityOperator& rho, const ModeOperator& projector) {
    const double p = outcome_probability(rho, projector);
    if (p < kZeroProbability)
        throw std::invalid_argument("conditioned_state: zero-probability outcome");
    Matrix post = projector.matrix() * rho.matrix() * projector.matrix() / p;
    post = 0.5 * (post + post.adjoint().eval());  // scrub rounding asymmetry
    return DensityOperator(rho.basis(), std::move(post));
}

double joint_probability(const DensityOperator& rho,
                         const std::vector<SubsystemProjector>& projectors) {
    if (projectors.empty())
        throw std::invalid_argument("joint_probability: no projectors");
    check_disjoint(projectors);
    Matrix product = projectors.front().projector.matrix();
    for (std::size_t i = 1; i < projectors.size(); ++i)
        product = product * projectors[i].projector.matrix();
    const double p = (product * rho.matrix()).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

double conditional_probability(const DensityOperator& rho, const SubsystemProjector& target,
                               const SubsystemProjector& given) {
    const double p_given = outcome_probability(rho, given.projector);
    if (p_given < kZeroProbability)
        throw std::invalid_argument("conditional_probability: conditioning on zero-probability outcome");
    return joint_probability(rho, {target, given}) / p_given;
}

std::pair<double, double> conditional_mean_variance(const DensityOperator& rho,
                                                    const ModeOperator& observable,
                                                    const ProjectorFamily& measured,
                                                    int outcome_index) {
    if (outcome_index < 0 ||
        outcome_index >= static_cast<int>(measured.outcomes.size()))
        throw std::invalid_argument("conditional_mean_variance: outcome index out of range");
    const DensityOperator post =
        conditioned_state(rho, measured.outcomes[outcome_index].projector);
    return {expectation(post, observable).real(), variance(post, observable)};
}

DensityOperator unrecorded_state(const DensityOperator& rho, const ProjectorFamily& family) {
    const int dim = rho.basis().dim();
    Matrix mixed = Matrix::Zero(dim, dim);
    for (const ProjectorOutcome& outcome : family.outcomes)
        mixed += outcome.projector.matrix() * rho.matrix() * outcome.projector.matrix();
    return DensityOperator(rho.basis(), std::move(mixed));
}

ModeOperator position_op(const FockBasis& basis, int mode) {
    const ModeOperator a = annihilation_op(basis, mode);
    return ((1.0 / std::sqrt(2.0)) * (a + a.adjoint())).assume_hermitian();
}

ModeOperator momentum_op(const FockBasis& basis, int mode) {
    const ModeOperator a = annihilation_op(basis, mode);
    const complex scale{0.0, -1.0 / std::sqrt(2.0)};
    return (scale * (a - a.adjoint())).assume_hermitian();
}

}  // namespace boson
