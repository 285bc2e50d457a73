// Implementation of the dynamical toy processes.

#include "boson/processes.hpp"

#include "boson/states.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boson {

namespace {

// exp(-i H t) for Hermitian H via eigendecomposition.
Matrix evolution_operator(const Matrix& hamiltonian, double time) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
    const Eigen::VectorXd& values = solver.eigenvalues();
    Vector phases(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        phases(i) = std::polar(1.0, -values(i) * time);
    return solver.eigenvectors() * phases.asDiagonal() *
           solver.eigenvectors().adjoint();
}

}  // namespace

ProcessResult dowling_fock(int n_reservoir, double phi, double kappa) {
    if (n_reservoir < 1)
        throw std::invalid_argument("dowling_fock: reservoir occupation must be >= 1");
    if (!(kappa > 0.0)) throw std::invalid_argument("dowling_fock: kappa must be positive");

    const double root_n = std::sqrt(static_cast<double>(n_reservoir));
    const double pulse_time = std::numbers::pi / (2.0 * kappa * root_n);
    const double rabi = 0.5 * kappa * root_n;  // half-pulse angle rabi*t = pi/4

    // Two-level amplitudes (atom, molecule) through pulse / free / pulse.
    Eigen::Matrix2cd pulse;
    const double angle = rabi * pulse_time;
    pulse << std::cos(angle), complex(0.0, -1.0) * std::sin(angle),
        complex(0.0, -1.0) * std::sin(angle), std::cos(angle);
    Eigen::Matrix2cd free_stage = Eigen::Matrix2cd::Identity();
    free_stage(1, 1) = std::polar(1.0, -phi);
    const Eigen::Vector2cd amps = pulse * free_stage * pulse * Eigen::Vector2cd(1.0, 0.0);

    // Tracing the reservoir kills the atom-molecule coherence (the two
    // branches leave it in occupations differing by one), so the reduced
    // state is the diagonal mixture of the branch weights.
    const FockBasis basis({1, 1});
    Matrix reduced = Matrix::Zero(basis.dim(), basis.dim());
    const int atom_index = basis.index_of({1, 0});
    const int molecule_index = basis.index_of({0, 1});
    reduced(atom_index, atom_index) = std::norm(amps(0));
    reduced(molecule_index, molecule_index) = std::norm(amps(1));

    ProcessResult result{DensityOperator(basis, std::move(reduced)),
                         {{"p_atom", std::norm(amps(0))},
                          {"p_molecule", std::norm(amps(1))}},
                         {{"resonant", pulse_time}, {"free", phi}, {"resonant", pulse_time}}};
    return result;
}

ProcessResult dowling_full(int n_bec, double kappa, double delta, double tau,
                           const std::vector<int>& cutoffs) {
    if (n_bec < 1) throw std::invalid_argument("dowling_full: n_bec must be >= 1");
    if (!(kappa >= 0.0)) throw std::invalid_argument("dowling_full: kappa must be >= 0");
    if (cutoffs.size() != 3)
        throw std::invalid_argument("dowling_full: need three mode cutoffs");
    if (cutoffs[0] < 1 || cutoffs[1] < 1 || cutoffs[2] < n_bec + 1)
        throw std::invalid_argument(
            "dowling_full: cutoffs must accommodate one conversion and the reservoir");

    const FockBasis basis(cutoffs);
    const double root_n = std::sqrt(static_cast<double>(n_bec));
    // kappa = 0 degenerates to free evolution only (zero-length pulses).
    const double pulse_time =
        kappa > 0.0 ? std::numbers::pi / (2.0 * kappa * root_n) : 0.0;

    // H = (kappa/2)(m^dag a r + h.c.), modes (atom, molecule, reservoir).
    const Matrix convert = creation_op(basis, 1).matrix() *
                           annihilation_op(basis, 0).matrix() *
                           annihilation_op(basis, 2).matrix();
    const Matrix hamiltonian = 0.5 * kappa * (convert + convert.adjoint().eval());

    Vector atom_in = Vector::Zero(cutoffs[0] + 1);
    atom_in(1) = 1.0;
    Vector molecule_in = Vector::Zero(cutoffs[1] + 1);
    molecule_in(0) = 1.0;
    const StateVector reservoir =
        coherent_state(complex(root_n, 0.0), cutoffs[2]);
    const StateVector input = tensor(
        tensor(StateVector(FockBasis({cutoffs[0]}), atom_in),
               StateVector(FockBasis({cutoffs[1]}), molecule_in)),
        reservoir);

    const Matrix pulse = evolution_operator(hamiltonian, pulse_time);
    Vector free_phases(basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
        free_phases(i) = std::polar(1.0, -delta * tau * basis.occupancy(i)[1]);

    Vector amps = pulse * input.amps();
    amps = free_phases.asDiagonal() * amps;
    amps = pulse * amps;
    const StateVector final_full(basis, amps);

    const ModeOperator weighted_total =
        (number_op(basis, 0) + 2.0 * number_op(basis, 1) + number_op(basis, 2))
            .assume_hermitian();
    const double charge_in = expectation(input, weighted_total).real();
    const double charge_out = expectation(final_full, weighted_total).real();

    const DensityOperator reduced =
        partial_trace(DensityOperator::pure(final_full), {0, 1});
    const FockBasis& pair_basis = reduced.basis();
    const double p_atom =
        reduced.matrix()(pair_basis.index_of({1, 0}), pair_basis.index_of({1, 0})).real();
    const double p_molecule =
        reduced.matrix()(pair_basis.index_of({0, 1}), pair_basis.index_of({0, 1})).real();

    ProcessResult result{reduced,
                         {{"p_atom", p_atom},
                          {"p_molecule", p_molecule},
                          {"weighted_number_in", charge_in},
                          {"weighted_number_out", charge_out}},
                         {{"resonant", pulse_time}, {"free", delta * tau},
                          {"resonant", pulse_time}}};
    return result;
}

ProcessResult vacuum_interferometer(complex alpha, complex beta, double delta,
                                    double tau, bool mixed_input) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
        throw std::invalid_argument("vacuum_interferometer: input amplitudes unnormalized");

    const FockBasis basis({1, 1});
    const ModeOperator exchange =
        (hop_op(basis, 0, 1) + hop_op(basis, 1, 0)).assume_hermitian();
    const Matrix splitter =
        evolution_operator(exchange.matrix(), std::numbers::pi / 4.0);
    Vector arm_phases(basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
        arm_phases(i) = std::polar(1.0, -delta * tau * basis.occupancy(i)[1]);
    const Matrix network =
        splitter * Matrix(arm_phases.asDiagonal()) * splitter;

    Vector input = Vector::Zero(basis.dim());
    input(basis.index_of({0, 0})) = alpha;
    input(basis.index_of({1, 0})) = beta;

    Matrix rho_in;
    if (mixed_input) {
        rho_in = Matrix::Zero(basis.dim(), basis.dim());
        rho_in(basis.index_of({0, 0}), basis.index_of({0, 0})) = std::norm(alpha);
        rho_in(basis.index_of({1, 0}), basis.index_of({1, 0})) = std::norm(beta);
    } else {
        rho_in = input * input.adjoint();
    }
    Matrix rho_out = network * rho_in * network.adjoint();

    const auto population = [&](int n0, int n1) {
        const int idx = basis.index_of({n0, n1});
        return rho_out(idx, idx).real();
    };
    const double p10 = population(1, 0);
    const double p01 = population(0, 1);
    const double p00 = population(0, 0);
    const double p11 = population(1, 1);

    ProcessResult result{DensityOperator(basis, std::move(rho_out)),
                         {{"p_10", p10}, {"p_01", p01}, {"p_00", p00}, {"p_11", p11}},
                         {{"beam_splitter", std::numbers::pi / 4.0},
                          {"free", delta * tau},
                          {"beam_splitter", std::numbers::pi / 4.0}}};
    return result;
}

double clock_phase_probability(int n_max, int p, int q, double omega_dt) {
    if (n_max < 0) throw std::invalid_argument("clock: n_max must be >= 0");
    if (p < 0 || p > n_max || q < 0 || q > n_max)
        throw std::invalid_argument("clock: phase index out of range");

    const int dim = n_max + 1;
    const double theta_p = 2.0 * std::numbers::pi * p / dim;
    const double theta_q = 2.0 * std::numbers::pi * q / dim;
    const double delta = theta_p - theta_q - omega_dt;

    const double half = 0.5 * delta;
    if (std::abs(std::sin(half)) < 1e-6) {
        // Near-degenerate kernel: sum the geometric series directly.
        complex sum(0.0, 0.0);
        for (int n = 0; n < dim; ++n) sum += std::polar(1.0, delta * n);
        return std::norm(sum) / (static_cast<double>(dim) * dim);
    }
    const double kernel = std::sin(dim * half) / std::sin(half);
    return kernel * kernel / (static_cast<double>(dim) * dim);
}

}  // namespace boson
