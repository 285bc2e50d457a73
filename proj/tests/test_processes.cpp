// Dynamical sequences checked against their closed-form reductions: the
// two-level conversion interferometer, the full three-mode model with its
// conserved weighted number, the single-atom interferometer, and the phase
// readout kernel compared to direct evolution.

#include "doctest.h"
#include "oracle_helpers.hpp"

#include "boson/fock.hpp"
#include "boson/processes.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace boson;

namespace {

double stage_duration(const ProcessResult& result, std::size_t index,
                      const std::string& label) {
    REQUIRE(index < result.stages.size());
    CHECK(result.stages[index].first == label);
    return result.stages[index].second;
}

}  // namespace

TEST_SUITE("processes") {

TEST_CASE("conversion fringes follow the half-angle law at every reservoir size") {
    for (const int n_reservoir : {1, 10, 100}) {
        for (int i = 0; i < 32; ++i) {
            const double phi = 2.0 * std::numbers::pi * i / 32.0;
            const ProcessResult result = dowling_fock(n_reservoir, phi, 1.3);
            const double half = std::sin(phi / 2.0);
            CAPTURE(n_reservoir);
            CAPTURE(phi);
            CHECK(std::abs(result.observables.at("p_atom") - half * half) < 1e-12);
            CHECK(result.observables.at("p_atom") +
                      result.observables.at("p_molecule") ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("conversion output is independent of the reservoir occupation") {
    const double phi = 1.234;
    double low = 2.0, high = -1.0;
    for (const int n : {1, 2, 5, 17, 60, 200}) {
        const double p = dowling_fock(n, phi, 0.7).observables.at("p_atom");
        low = std::min(low, p);
        high = std::max(high, p);
    }
    CHECK(high - low < 1e-12);
}

TEST_CASE("conversion pulses carry their timing and the output is a diagonal mixture") {
    const double kappa = 2.0;
    const int n_reservoir = 9;
    const double phi = 0.8;
    const ProcessResult result = dowling_fock(n_reservoir, phi, kappa);
    REQUIRE(result.stages.size() == 3);
    const double pulse = std::numbers::pi / (2.0 * kappa * 3.0);
    CHECK(stage_duration(result, 0, "resonant") == doctest::Approx(pulse).epsilon(1e-14));
    CHECK(stage_duration(result, 1, "free") == doctest::Approx(phi).epsilon(1e-14));
    CHECK(stage_duration(result, 2, "resonant") == doctest::Approx(pulse).epsilon(1e-14));

    const FockBasis& basis = result.final_state.basis();
    const Matrix rho = result.final_state.matrix();
    CHECK((rho - Matrix(rho.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(rho(basis.index_of({1, 0}), basis.index_of({1, 0})).real() ==
          doctest::Approx(std::pow(std::sin(phi / 2.0), 2)).epsilon(1e-12));
    CHECK(rho(basis.index_of({0, 1}), basis.index_of({0, 1})).real() ==
          doctest::Approx(std::pow(std::cos(phi / 2.0), 2)).epsilon(1e-12));

    CHECK_THROWS_AS(dowling_fock(0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dowling_fock(4, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("the weighted number commutes with the conversion coupling") {
    const FockBasis basis({1, 1, 6});
    const ModeOperator coupling =
        creation_op(basis, 1) * annihilation_op(basis, 0) * annihilation_op(basis, 2);
    const Matrix h = 0.5 * (coupling.matrix() + coupling.matrix().adjoint().eval());
    const Matrix weighted = (number_op(basis, 0) + 2.0 * number_op(basis, 1) +
                             number_op(basis, 2))
                                .matrix();
    CHECK((h * weighted - weighted * h).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("full model conserves the weighted number through the sequence") {
    const ProcessResult result = dowling_full(9, 0.8, 0.7, 1.0, {1, 1, 43});
    CHECK(result.observables.at("weighted_number_in") ==
          doctest::Approx(10.0).epsilon(1e-10));
    CHECK(std::abs(result.observables.at("weighted_number_out") -
                   result.observables.at("weighted_number_in")) < 1e-10);
    CHECK(result.observables.at("p_atom") + result.observables.at("p_molecule") ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("full model reduces to the two-level fringes for a large reservoir") {
    const double delta_tau = std::numbers::pi / 2.0;
    const ProcessResult result = dowling_full(25, 1.0, delta_tau, 1.0, {1, 1, 70});
    CHECK(std::abs(result.observables.at("p_atom") - 0.5) < 0.05);
}

TEST_CASE("switching the coupling off leaves the atom untouched") {
    const ProcessResult result = dowling_full(4, 0.0, 1.3, 2.0, {1, 1, 25});
    CHECK(result.observables.at("p_atom") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.observables.at("p_molecule") == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("full model rejects undersized bases") {
    CHECK_THROWS_AS(dowling_full(0, 1.0, 0.0, 1.0, {1, 1, 8}), std::invalid_argument);
    CHECK_THROWS_AS(dowling_full(4, -1.0, 0.0, 1.0, {1, 1, 8}), std::invalid_argument);
    CHECK_THROWS_AS(dowling_full(4, 1.0, 0.0, 1.0, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dowling_full(9, 1.0, 0.0, 1.0, {1, 1, 9}), std::invalid_argument);
}

TEST_CASE("single-atom fringes oscillate against the vacuum background") {
    const ProcessResult full_swing =
        vacuum_interferometer(0.0, 1.0, std::numbers::pi, 1.0, false);
    CHECK(full_swing.observables.at("p_10") == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(full_swing.observables.at("p_01") == doctest::Approx(0.0).epsilon(1e-10));

    const ProcessResult vacuum_only = vacuum_interferometer(1.0, 0.0, 0.7, 1.0, false);
    CHECK(vacuum_only.observables.at("p_10") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(vacuum_only.observables.at("p_01") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(vacuum_only.observables.at("p_00") == doctest::Approx(1.0).epsilon(1e-12));

    const complex alpha = std::polar(1.0 / std::sqrt(2.0), 0.3);
    const complex beta = std::polar(1.0 / std::sqrt(2.0), -1.1);
    for (int i = 0; i < 8; ++i) {
        const double delta_tau = 2.0 * std::numbers::pi * i / 8.0;
        const ProcessResult result =
            vacuum_interferometer(alpha, beta, delta_tau, 1.0, false);
        const double weight = std::norm(beta);
        CAPTURE(delta_tau);
        CHECK(std::abs(result.observables.at("p_10") -
                       weight * std::pow(std::sin(delta_tau / 2.0), 2)) < 1e-10);
        CHECK(std::abs(result.observables.at("p_01") -
                       weight * std::pow(std::cos(delta_tau / 2.0), 2)) < 1e-10);
        CHECK(result.observables.at("p_00") ==
              doctest::Approx(std::norm(alpha)).epsilon(1e-10));
        CHECK(result.observables.at("p_11") == doctest::Approx(0.0).epsilon(1e-12));
        const double total =
            result.observables.at("p_10") + result.observables.at("p_01") +
            result.observables.at("p_00") + result.observables.at("p_11");
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}

TEST_CASE("fringe visibility survives dephasing the input") {
    const complex alpha = std::polar(std::sqrt(0.3), 0.4);
    const complex beta = std::polar(std::sqrt(0.7), 1.9);
    for (const double delta_tau : {0.3, 1.1, 2.9}) {
        const ProcessResult pure =
            vacuum_interferometer(alpha, beta, delta_tau, 1.0, false);
        const ProcessResult mixed =
            vacuum_interferometer(alpha, beta, delta_tau, 1.0, true);
        for (const char* key : {"p_10", "p_01", "p_00", "p_11"})
            CHECK(std::abs(pure.observables.at(key) - mixed.observables.at(key)) <
                  1e-12);
        const double pure_purity =
            (pure.final_state.matrix() * pure.final_state.matrix()).trace().real();
        const double mixed_purity =
            (mixed.final_state.matrix() * mixed.final_state.matrix()).trace().real();
        CHECK(pure_purity == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(mixed_purity < 1.0 - 1e-3);
    }

    const ProcessResult staged = vacuum_interferometer(0.0, 1.0, 0.5, 2.0, false);
    REQUIRE(staged.stages.size() == 3);
    CHECK(staged.stages[0].first == "beam_splitter");
    CHECK(staged.stages[1].first == "free");
    CHECK(staged.stages[1].second == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(staged.stages[2].first == "beam_splitter");

    CHECK_THROWS_AS(vacuum_interferometer(1.0, 1.0, 0.0, 1.0, false),
                    std::invalid_argument);
}

TEST_CASE("phase readout is sharp on resonance and matches direct evolution") {
    CHECK(clock_phase_probability(7, 3, 3, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    const double step = 2.0 * std::numbers::pi / 11.0;
    CHECK(clock_phase_probability(10, 5, 3, 2.0 * step) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // Direct evolution oracle: uniform phase vectors under the number phase.
    const int n_max = 10;
    const int dim = n_max + 1;
    const double omega_dt = 0.1;
    for (const int p : {5, 0}) {
        for (const int q : {3, 5, 10}) {
            Eigen::VectorXcd start(dim), target(dim);
            for (int n = 0; n < dim; ++n) {
                const double theta_p = 2.0 * std::numbers::pi * p / dim;
                const double theta_q = 2.0 * std::numbers::pi * q / dim;
                start(n) = std::polar(1.0 / std::sqrt(dim), n * (theta_p - omega_dt));
                target(n) = std::polar(1.0 / std::sqrt(dim), n * theta_q);
            }
            const double direct = std::norm(complex(target.dot(start)));
            CAPTURE(p);
            CAPTURE(q);
            CHECK(std::abs(clock_phase_probability(n_max, p, q, omega_dt) - direct) <
                  1e-12);
        }
    }
}

TEST_CASE("phase readout probabilities are complete and bounded") {
    for (const double omega_dt : {0.0, 0.05, 1.7, 3.9}) {
        double total = 0.0;
        for (int q = 0; q <= 12; ++q) {
            const double prob = clock_phase_probability(12, 4, q, omega_dt);
            CHECK(prob >= -1e-15);
            CHECK(prob <= 1.0 + 1e-12);
            total += prob;
        }
        CAPTURE(omega_dt);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(clock_phase_probability(-1, 0, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(clock_phase_probability(4, 5, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(clock_phase_probability(4, 0, -1, 0.0), std::invalid_argument);
}

}  // TEST_SUITE
