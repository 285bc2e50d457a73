// Super-selection-rule diagnostics, twirling, separable construction and
// sampling, reference internalization.

#include "boson/ssr.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace boson {

namespace {

constexpr double kComplianceTol = 1e-10;
constexpr double kDiagonalTol = 1e-12;
constexpr double kWeightTol = 1e-12;

std::vector<long long> sector_labels(const ModeOperator& number_operator) {
    const Matrix& n = number_operator.matrix();
    Matrix off = n;
    off.diagonal().setZero();
    if (max_abs(off) > kDiagonalTol)
        throw std::invalid_argument("ssr: number operator must be diagonal in the Fock basis");
    std::vector<long long> labels(n.rows());
    for (int i = 0; i < n.rows(); ++i) labels[i] = std::llround(n(i, i).real());
    return labels;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

complex random_disc(std::mt19937_64& rng) {
    for (;;) {
        const double x = 2.0 * uniform01(rng) - 1.0;
        const double y = 2.0 * uniform01(rng) - 1.0;
        if (x * x + y * y <= 1.0) return {x, y};
    }
}

Matrix random_density_matrix(int dim, std::mt19937_64& rng) {
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = random_disc(rng);
    Matrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return rho;
}

void validate_partition(const std::vector<std::vector<int>>& subsystems,
                        std::size_t n_modes) {
    int next = 0;
    for (const std::vector<int>& block : subsystems) {
        if (block.empty()) throw std::invalid_argument("ssr: empty subsystem block");
        for (int mode : block) {
            if (mode != next)
                throw std::invalid_argument(
                    "ssr: subsystems must partition the modes into contiguous ascending blocks");
            ++next;
        }
    }
    if (static_cast<std::size_t>(next) != n_modes)
        throw std::invalid_argument("ssr: subsystems do not cover all modes");
}

std::vector<int> block_cutoffs(const std::vector<int>& block,
                               const std::vector<int>& cutoffs) {
    std::vector<int> out;
    out.reserve(block.size());
    for (int mode : block) {
        if (mode < 0 || mode >= static_cast<int>(cutoffs.size()))
            throw std::invalid_argument("ssr: subsystem mode out of range");
        out.push_back(cutoffs[mode]);
    }
    return out;
}

DensityOperator sample_factor(const FockBasis& basis, SampleMode mode,
                              std::mt19937_64& rng) {
    switch (mode) {
        case SampleMode::local_ssr: {
            const DensityOperator raw(basis, random_density_matrix(basis.dim(), rng));
            return twirl(raw, total_number_op(basis));
        }
        case SampleMode::pair_fixed_n: {
            if (basis.modes() != 2)
                throw std::invalid_argument("ssr: pair_fixed_n needs two-mode blocks");
            const int max_total = basis.cutoffs()[0] + basis.cutoffs()[1];
            const int total = static_cast<int>(uniform01(rng) * (max_total + 1.0));
            Vector amps = Vector::Zero(basis.dim());
            for (int i = 0; i < basis.dim(); ++i) {
                const std::vector<int> occ = basis.occupancy(i);
                if (occ[0] + occ[1] == std::min(total, max_total))
                    amps(i) = random_disc(rng);
            }
            return DensityOperator::pure(StateVector(basis, amps));
        }
        case SampleMode::one_boson_pair: {
            if (basis.modes() != 2 || basis.cutoffs()[0] < 1 || basis.cutoffs()[1] < 1)
                throw std::invalid_argument(
                    "ssr: one_boson_pair needs two-mode blocks of cutoff >= 1");
            const double mix = uniform01(rng) * 2.0 * std::numbers::pi;
            const double depol = uniform01(rng) * 2.0 * std::numbers::pi;
            const double phase = uniform01(rng) * 2.0 * std::numbers::pi;
            const double p_a = std::sin(mix) * std::sin(mix);
            const double p_b = 1.0 - p_a;
            const double s_d = std::sin(depol) * std::sin(depol);
            const complex coherence =
                std::sqrt(p_a * p_b) * s_d * std::polar(1.0, phase);
            Matrix rho = Matrix::Zero(basis.dim(), basis.dim());
            const int ia = basis.index_of({1, 0});
            const int ib = basis.index_of({0, 1});
            rho(ia, ia) = p_a;
            rho(ib, ib) = p_b;
            rho(ia, ib) = coherence;
            rho(ib, ia) = std::conj(coherence);
            return DensityOperator(basis, std::move(rho));
        }
        case SampleMode::unrestricted:
            return DensityOperator(basis, random_density_matrix(basis.dim(), rng));
    }
    throw std::invalid_argument("ssr: unknown sample mode");
}

}  // namespace

SsrReport ssr_check(const DensityOperator& rho, const ModeOperator& number_operator) {
    if (rho.basis() != number_operator.basis())
        throw std::invalid_argument("ssr_check: basis mismatch");
    const std::vector<long long> labels = sector_labels(number_operator);
    const Matrix& m = rho.matrix();

    SsrReport report;
    // [N, rho]_(i,j) = (N_i - N_j) rho_(i,j): the defect is driven entirely
    // by cross-sector elements.
    double defect = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (labels[i] != labels[j])
                defect = std::max(
                    defect, std::abs(static_cast<double>(labels[i] - labels[j])) *
                                std::abs(m(i, j)));
    report.defect = defect;
    report.compliant = defect < kComplianceTol;
    for (int i = 0; i < m.rows(); ++i) report.sector_populations[labels[i]] += m(i, i).real();
    return report;
}

DensityOperator twirl(const DensityOperator& rho, const ModeOperator& number_operator) {
    if (rho.basis() != number_operator.basis())
        throw std::invalid_argument("twirl: basis mismatch");
    const std::vector<long long> labels = sector_labels(number_operator);
    Matrix out = rho.matrix();
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j)
            if (labels[i] != labels[j]) out(i, j) = 0.0;
    return DensityOperator(rho.basis(), std::move(out));
}

DensityOperator separable_state(const SeparableSpec& spec) {
    if (spec.weights.empty() || spec.weights.size() != spec.components.size())
        throw std::invalid_argument("separable_state: weight/component count mismatch");
    double total = 0.0;
    for (double w : spec.weights) {
        if (w < -kWeightTol) throw invariant_error("separable_state: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > kWeightTol)
        throw invariant_error("separable_state: weights do not sum to 1");

    Matrix sum;
    FockBasis full({0});
    bool first = true;
    for (std::size_t r = 0; r < spec.components.size(); ++r) {
        const std::vector<DensityOperator>& factors = spec.components[r];
        if (factors.empty() || factors.size() != spec.subsystems.size())
            throw std::invalid_argument("separable_state: factor/subsystem count mismatch");
        DensityOperator product = factors.front();
        for (std::size_t x = 1; x < factors.size(); ++x)
            product = tensor(product, factors[x]);
        if (first) {
            validate_partition(spec.subsystems, product.basis().cutoffs().size());
            full = product.basis();
            sum = Matrix::Zero(full.dim(), full.dim());
            first = false;
        } else if (product.basis() != full) {
            throw std::invalid_argument("separable_state: component bases differ across R");
        }
        sum += spec.weights[r] * product.matrix();
    }
    return DensityOperator(full, std::move(sum));
}

SeparableSpec sample_separable(std::uint64_t seed, const SampleConfig& config) {
    if (config.n_components < 1)
        throw std::invalid_argument("sample_separable: need at least one component");
    validate_partition(config.subsystems, config.cutoffs.size());

    std::mt19937_64 rng(seed);
    SeparableSpec spec;
    spec.subsystems = config.subsystems;

    double total = 0.0;
    for (int r = 0; r < config.n_components; ++r) {
        // Floor keeps weights bounded away from zero so every component is
        // exercised by downstream checks.
        const double w = 0.05 + uniform01(rng);
        spec.weights.push_back(w);
        total += w;
    }
    for (double& w : spec.weights) w /= total;

    for (int r = 0; r < config.n_components; ++r) {
        std::vector<DensityOperator> factors;
        factors.reserve(config.subsystems.size());
        for (const std::vector<int>& block : config.subsystems) {
            const FockBasis basis(block_cutoffs(block, config.cutoffs));
            factors.push_back(sample_factor(basis, config.mode, rng));
        }
        spec.components.push_back(std::move(factors));
    }
    return spec;
}

std::pair<StateVector, DensityOperator> internalize_reference(const StateVector& system,
                                                              int n_ref) {
    if (system.basis().modes() != 1 || system.basis().is_sector())
        throw std::invalid_argument("internalize_reference: system must be a single product mode");
    const Vector& amps = system.amps();
    int m_max = 0;
    for (int m = 0; m < amps.size(); ++m)
        if (std::abs(amps(m)) > 0.0) m_max = m;
    if (n_ref < m_max)
        throw std::invalid_argument("internalize_reference: reference occupation too small");

    const FockBasis joint({m_max, n_ref});
    Vector entangled = Vector::Zero(joint.dim());
    for (int m = 0; m <= m_max; ++m)
        entangled(joint.index_of({m, n_ref - m})) = amps(m);
    const StateVector psi(joint, std::move(entangled));
    return {psi, partial_trace(DensityOperator::pure(psi), {0})};
}

std::pair<DensityOperator, SsrReport> shared_qubit_mixture(complex alpha, complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
        throw std::invalid_argument("shared_qubit_mixture: amplitudes must be normalized");

    const FockBasis basis({1, 1});
    const double r = 1.0 / std::sqrt(2.0);
    Vector plus(2), minus(2), b1(2), b2(2);
    plus << r, r;
    minus << r, -r;
    b1 << alpha, beta;
    b2 << -std::conj(beta), std::conj(alpha);

    const FockBasis qubit({1});
    const StateVector psi1 = tensor(StateVector(qubit, plus), StateVector(qubit, b1));
    const StateVector psi2 = tensor(StateVector(qubit, minus), StateVector(qubit, b2));
    Matrix rho = 0.5 * (psi1.amps() * psi1.amps().adjoint()) +
                 0.5 * (psi2.amps() * psi2.amps().adjoint());
    DensityOperator state(basis, std::move(rho));
    SsrReport report = ssr_check(state, total_number_op(basis));
    return {std::move(state), std::move(report)};
}

}  // namespace boson
