// Amplitude-level and matrix-element-level checks of every named state
// against independently coded closed forms.

#include "doctest.h"
#include "oracle_helpers.hpp"

#include "boson/states.hpp"

#include <cmath>
#include <numbers>

using namespace boson;
using std::numbers::pi;

TEST_SUITE("states") {

TEST_CASE("coherent state carries Poisson weights and is a ladder eigenvector") {
    const complex alpha{1.1, -0.7};
    const double mean = std::norm(alpha);
    const int n_max = coherent_cutoff(std::abs(alpha));
    const StateVector psi = coherent_state(alpha, n_max);
    CHECK(psi.basis() == FockBasis({n_max}));

    for (int n = 0; n <= n_max; ++n)
        CHECK(std::norm(psi.amps()(n)) ==
              doctest::Approx(oracle::poisson_weight(mean, n)).epsilon(1e-10));
    // Phases: arg(C_n) = n arg(alpha).
    CHECK(std::abs(psi.amps()(3) -
                   std::polar(std::abs(psi.amps()(3)), 3.0 * std::arg(alpha))) < 1e-13);

    const ModeOperator n_op = number_op(psi.basis(), 0);
    CHECK(expectation(psi, n_op).real() == doctest::Approx(mean).epsilon(1e-9));
    CHECK(variance(psi, n_op) == doctest::Approx(mean).epsilon(1e-8));

    // a|alpha> = alpha|alpha> componentwise below the cutoff.
    const Vector lowered = annihilation_op(psi.basis(), 0).matrix() * psi.amps();
    for (int n = 0; n < n_max; ++n)
        CHECK(std::abs(lowered(n) - alpha * psi.amps()(n)) < 1e-12);

    CHECK_THROWS_AS(coherent_state(complex(3.0, 0.0), 5), std::invalid_argument);
    CHECK(coherent_cutoff(3.0) >= 9 + 24 + 10);
}

TEST_CASE("mixed two-mode coherent state has analytic sector-diagonal elements") {
    const double abs_alpha = std::sqrt(2.0);
    const int n_max = coherent_cutoff(abs_alpha);
    const DensityOperator rho = mixed_two_mode_coherent(abs_alpha, n_max);
    const FockBasis& basis = rho.basis();
    CHECK(basis == FockBasis({n_max, n_max}));

    const double a2 = abs_alpha * abs_alpha;
    for (const auto& [n, p, m, q] :
         std::vector<std::array<int, 4>>{{0, 0, 0, 0}, {1, 1, 2, 0}, {2, 1, 1, 2}, {3, 0, 1, 2}}) {
        const double expected = std::exp(-2.0 * a2) *
                                std::pow(abs_alpha, n + m + p + q) /
                                std::sqrt(oracle::factorial(n) * oracle::factorial(m) *
                                          oracle::factorial(p) * oracle::factorial(q));
        CHECK(std::abs(rho.matrix()(basis.index_of({n, p}), basis.index_of({m, q})) -
                       complex(expected)) < 1e-12);
    }
    // Elements that change the total boson number vanish (phase averaging).
    CHECK(std::abs(rho.matrix()(basis.index_of({1, 0}), basis.index_of({0, 0}))) == 0.0);
    const ModeOperator n_tot = total_number_op(basis);
    CHECK(max_abs(n_tot.matrix() * rho.matrix() - rho.matrix() * n_tot.matrix()) < 1e-12);

    // Reduced single-mode state is the Poisson (fully dephased coherent) state.
    const DensityOperator reduced = partial_trace(rho, {0});
    for (int n = 0; n <= n_max; ++n)
        CHECK(reduced.matrix()(n, n).real() ==
              doctest::Approx(oracle::poisson_weight(a2, n)).epsilon(1e-9));
    CHECK(max_abs(reduced.matrix() - reduced.matrix().diagonal().asDiagonal().toDenseMatrix()) <
          1e-14);

    // |<b' a>|^2 == <n_a n_b> = |alpha|^4 for this state; at |alpha|^2 = 2 both are 4.
    const complex cross = expectation(rho, hop_op(basis, 0, 1));
    const double joint =
        expectation(rho, (number_op(basis, 0) * number_op(basis, 1))).real();
    CHECK(std::norm(cross) == doctest::Approx(a2 * a2).epsilon(1e-9));
    CHECK(joint == doctest::Approx(a2 * a2).epsilon(1e-9));
    CHECK(std::norm(cross) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("noon state places its two amplitudes at the sector endpoints") {
    const int n = 5;
    const double theta = 0.4;
    const StateVector psi = noon_state(n, theta);
    const FockBasis& basis = psi.basis();
    CHECK(basis == FockBasis::fixed_total(2, n));
    CHECK(std::abs(psi.amps()(basis.index_of({n, 0})) - complex(std::cos(theta))) < 1e-14);
    CHECK(std::abs(psi.amps()(basis.index_of({0, n})) - complex(std::sin(theta))) < 1e-14);
    double middle = 0.0;
    for (int k = 1; k < n; ++k) middle += std::abs(psi.amps()(k));
    CHECK(middle == 0.0);
    CHECK_THROWS_AS(noon_state(0, theta), std::invalid_argument);
}

TEST_CASE("binomial state matches its closed-form amplitudes") {
    const int n = 4;
    const double theta = 0.7;
    const double chi = 0.9;
    const StateVector psi = binomial_state(n, theta, chi);
    const FockBasis& basis = psi.basis();
    CHECK(basis == FockBasis::fixed_total(2, n));
    for (int k = 0; k <= n; ++k) {
        const complex expected =
            std::sqrt(oracle::binomial(n, k)) * std::pow(std::cos(theta), k) *
            std::pow(std::sin(theta), n - k) *
            std::exp(complex(0.0, -chi * (2.0 * k - n) / 2.0));
        CHECK(std::abs(psi.amps()(basis.index_of({k, n - k})) - expected) < 1e-13);
    }
    CHECK(std::abs(psi.amps().norm() - 1.0) < 1e-14);
}

TEST_CASE("relative-phase state is a flat comb of sector phases") {
    const int n = 7;
    const int p = 2;
    const StateVector psi = relative_phase_state(n, p);
    const FockBasis& basis = psi.basis();
    const double theta_p = 2.0 * pi * p / (n + 1);
    for (int k = 0; k <= n; ++k) {
        const complex expected =
            std::exp(complex(0.0, (n / 2.0 - k) * theta_p)) / std::sqrt(n + 1.0);
        CHECK(std::abs(psi.amps()(basis.index_of({k, n - k})) - expected) < 1e-14);
    }
    // Distinct p give orthogonal states.
    const StateVector other = relative_phase_state(n, -1);
    CHECK(std::abs(psi.amps().dot(other.amps())) < 1e-13);
    CHECK_THROWS_AS(relative_phase_state(7, 4), std::invalid_argument);
}

TEST_CASE("bell and ghz catalog lists the documented amplitudes") {
    const std::vector<NamedState> catalog = bell_and_ghz();
    REQUIRE(catalog.size() == 7);

    const NamedState& plus = catalog[0];
    CHECK(plus.label == "bell_one_boson");
    CHECK(plus.params.at("variant") == 0.0);
    const FockBasis& pair = plus.basis();
    CHECK(pair == FockBasis({1, 1}));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(plus.vector().amps()(pair.index_of({0, 1})) - complex(r)) < 1e-14);
    CHECK(std::abs(plus.vector().amps()(pair.index_of({1, 0})) - complex(r)) < 1e-14);
    const NamedState& minus = catalog[1];
    CHECK(std::abs(minus.vector().amps()(pair.index_of({1, 0})) + complex(r)) < 1e-14);

    const NamedState& singlet = catalog[2];
    CHECK(singlet.label == "bell_two_boson");
    CHECK(singlet.params.at("variant") == 0.0);
    const FockBasis& quad = singlet.basis();
    CHECK(quad == FockBasis({1, 1, 1, 1}));
    CHECK(std::abs(singlet.vector().amps()(quad.index_of({1, 0, 0, 1})) - complex(r)) < 1e-14);
    CHECK(std::abs(singlet.vector().amps()(quad.index_of({0, 1, 1, 0})) + complex(r)) < 1e-14);

    CHECK(std::abs(catalog[3].vector().amps()(quad.index_of({0, 1, 0, 1})) - complex(1.0)) <
          1e-14);
    CHECK(std::abs(catalog[4].vector().amps()(quad.index_of({0, 1, 1, 0})) - complex(r)) <
          1e-14);
    CHECK(std::abs(catalog[5].vector().amps()(quad.index_of({1, 0, 1, 0})) - complex(1.0)) <
          1e-14);

    const NamedState& ghz = catalog[6];
    CHECK(ghz.label == "ghz");
    const FockBasis& triple = ghz.basis();
    CHECK(triple == FockBasis({1, 1, 1}));
    CHECK(std::abs(ghz.vector().amps()(triple.index_of({0, 0, 0})) - complex(r)) < 1e-14);
    CHECK(std::abs(ghz.vector().amps()(triple.index_of({1, 1, 1})) - complex(r)) < 1e-14);
}

TEST_CASE("verstraete mixture equals its three-component normal form") {
    const DensityOperator rho = verstraete_state();
    const FockBasis& basis = rho.basis();
    CHECK(basis == FockBasis({1, 1}));

    Matrix expected = Matrix::Zero(4, 4);
    const int i00 = basis.index_of({0, 0});
    const int i01 = basis.index_of({0, 1});
    const int i10 = basis.index_of({1, 0});
    const int i11 = basis.index_of({1, 1});
    expected(i00, i00) = 0.25;
    expected(i11, i11) = 0.25;
    // (|0,1> + |1,0>)/sqrt(2) with weight 1/2.
    expected(i01, i01) = 0.25;
    expected(i10, i10) = 0.25;
    expected(i01, i10) = 0.25;
    expected(i10, i01) = 0.25;
    CHECK(oracle::max_diff(rho.matrix(), expected) < 1e-14);
}

TEST_CASE("named_state dispatches labels and attaches designated frames") {
    const NamedState fock = named_state("fock", {{"n", 3.0}});
    CHECK(fock.is_pure());
    CHECK(std::abs(fock.vector().amps()(3) - complex(1.0)) < 1e-14);

    const NamedState coh = named_state("coherent", {{"abs_alpha", 1.5}});
    CHECK(coh.basis() == FockBasis({coherent_cutoff(1.5)}));

    const NamedState mixed = named_state("mixed_two_mode_coherent", {{"abs_alpha", 1.0}});
    CHECK_FALSE(mixed.is_pure());
    CHECK_THROWS_AS(mixed.vector(), std::invalid_argument);

    const NamedState noon = named_state("noon", {{"N", 4.0}, {"theta", 0.3}});
    CHECK(noon.params.at("euler_alpha") == doctest::Approx(pi / 4.0));
    CHECK(noon.params.at("euler_beta") == 0.0);
    CHECK(noon.params.at("euler_gamma") == 0.0);

    const NamedState bin = named_state("binomial", {{"N", 4.0}, {"theta", 0.3}, {"chi", 0.2}});
    CHECK(bin.params.at("euler_alpha") == doctest::Approx(-pi + 0.2));
    CHECK(bin.params.at("euler_beta") == doctest::Approx(-0.6));
    CHECK(bin.params.at("euler_gamma") == doctest::Approx(-pi));

    const NamedState rel = named_state("relative_phase", {{"N", 8.0}, {"p", 2.0}});
    CHECK(rel.params.at("euler_alpha") == doctest::Approx(-pi + 4.0 * pi / 9.0));
    CHECK(rel.params.at("euler_beta") == doctest::Approx(-pi / 2.0));

    CHECK(named_state("ghz", {}).label == "ghz");
    CHECK(named_state("bell_two_boson", {{"variant", 2.0}}).basis() ==
          FockBasis({1, 1, 1, 1}));
    CHECK_THROWS_AS(named_state("unknown", {}), std::invalid_argument);
    CHECK_THROWS_AS(named_state("noon", {{"theta", 0.3}}), std::invalid_argument);
    CHECK_THROWS_AS(named_state("bell_two_boson", {{"variant", 9.0}}), std::invalid_argument);
}

}  // TEST_SUITE
