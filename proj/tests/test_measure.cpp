// Spectral projector families, conditioning, joint/conditional probability
// laws, the unrecorded-measurement channel, and the separable-state EPR
// variance-product bound.

#include "doctest.h"
#include "oracle_helpers.hpp"

#include "boson/measure.hpp"
#include "boson/ssr.hpp"
#include "boson/spin.hpp"
#include "boson/states.hpp"

#include <cmath>

using namespace boson;

TEST_SUITE("measure") {

TEST_CASE("spectral projectors resolve the number operator into Fock projectors") {
    const FockBasis basis({2});
    const ProjectorFamily family = spectral_projectors(number_op(basis, 0));
    REQUIRE(family.outcomes.size() == 3);
    for (int n = 0; n < 3; ++n) {
        CHECK(family.outcomes[n].eigenvalue == doctest::Approx(double(n)).epsilon(1e-12));
        Matrix expected = Matrix::Zero(3, 3);
        expected(n, n) = 1.0;
        CHECK(oracle::max_diff(family.outcomes[n].projector.matrix(), expected) < 1e-12);
    }
    CHECK_THROWS_AS(spectral_projectors(annihilation_op(basis, 0)), std::invalid_argument);
}

TEST_CASE("spin spectra on sectors come out as half-integer ladders") {
    const FockBasis sector = FockBasis::fixed_total(2, 2);
    const SpinFrame f = spin_frame(sector, 0, 1);
    const ProjectorFamily fz = spectral_projectors(f.sz);
    REQUIRE(fz.outcomes.size() == 3);
    CHECK(fz.outcomes[0].eigenvalue == doctest::Approx(-1.0));
    CHECK(fz.outcomes[1].eigenvalue == doctest::Approx(0.0));
    CHECK(fz.outcomes[2].eigenvalue == doctest::Approx(1.0));

    const FockBasis one = FockBasis::fixed_total(2, 1);
    const ProjectorFamily fx = spectral_projectors(spin_frame(one, 0, 1).sx);
    REQUIRE(fx.outcomes.size() == 2);
    CHECK(fx.outcomes[0].eigenvalue == doctest::Approx(-0.5));
    CHECK(fx.outcomes[1].eigenvalue == doctest::Approx(0.5));
    // Projectors onto (|0,1> -/+ |1,0>)/sqrt(2).
    Matrix minus(2, 2), plus(2, 2);
    minus << 0.5, -0.5, -0.5, 0.5;
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK(oracle::max_diff(fx.outcomes[0].projector.matrix(), minus) < 1e-12);
    CHECK(oracle::max_diff(fx.outcomes[1].projector.matrix(), plus) < 1e-12);

    // Fully degenerate observable: one outcome, identity projector.
    const ProjectorFamily fn = spectral_projectors(total_number_op(sector));
    REQUIRE(fn.outcomes.size() == 1);
    CHECK(fn.outcomes[0].eigenvalue == doctest::Approx(2.0));
    CHECK(oracle::max_diff(fn.outcomes[0].projector.matrix(), Matrix::Identity(3, 3)) <
          1e-12);
}

TEST_CASE("conditioning renormalizes onto the projected support") {
    const FockBasis basis({2});
    Vector one = Vector::Zero(3);
    one(1) = 1.0;
    const DensityOperator rho = DensityOperator::pure(StateVector(basis, one));
    const ProjectorFamily family = spectral_projectors(number_op(basis, 0));

    CHECK(outcome_probability(rho, family.outcomes[1].projector) == doctest::Approx(1.0));
    const DensityOperator post = conditioned_state(rho, family.outcomes[1].projector);
    CHECK(oracle::max_diff(post.matrix(), rho.matrix()) < 1e-12);
    // Re-measurement of the same outcome is certain; the measured observable
    // has zero conditional variance on a rank-1 outcome.
    CHECK(outcome_probability(post, family.outcomes[1].projector) ==
          doctest::Approx(1.0).epsilon(1e-10));
    const auto [mean, var] = conditional_mean_variance(rho, number_op(basis, 0), family, 1);
    CHECK(mean == doctest::Approx(1.0));
    CHECK(var == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(conditioned_state(rho, family.outcomes[2].projector),
                    std::invalid_argument);
}

TEST_CASE("conditioning a one-boson pair state collapses the partner mode") {
    const std::vector<NamedState> catalog = bell_and_ghz();
    const DensityOperator rho = catalog[0].density();  // (|0,1> + |1,0>)/sqrt(2)
    const FockBasis& basis = rho.basis();
    const ProjectorFamily nb = spectral_projectors(number_op(basis, 1));
    REQUIRE(nb.outcomes.size() == 2);
    CHECK(outcome_probability(rho, nb.outcomes[1].projector) == doctest::Approx(0.5));
    const DensityOperator post = conditioned_state(rho, nb.outcomes[1].projector);
    Matrix expected = Matrix::Zero(4, 4);
    expected(basis.index_of({0, 1}), basis.index_of({0, 1})) = 1.0;
    CHECK(oracle::max_diff(post.matrix(), expected) < 1e-12);
}

TEST_CASE("joint probabilities factor on product states and sum over components") {
    const FockBasis mode2({2});
    std::mt19937_64 rng(31);
    const DensityOperator rho_a = oracle::random_density(mode2, rng);
    const DensityOperator rho_b = oracle::random_density(mode2, rng);
    const DensityOperator product = tensor(rho_a, rho_b);
    const FockBasis& full = product.basis();

    const ProjectorFamily na = spectral_projectors(number_op(full, 0));
    const ProjectorFamily nb = spectral_projectors(number_op(full, 1));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double joint = joint_probability(
                product, {{{0}, na.outcomes[i].projector}, {{1}, nb.outcomes[j].projector}});
            const double marginal_a = rho_a.matrix()(i, i).real();
            const double marginal_b = rho_b.matrix()(j, j).real();
            CHECK(joint == doctest::Approx(marginal_a * marginal_b).epsilon(1e-10));
        }
    }

    // Separable mixture: joint equals the weighted sum of per-component
    // marginal products.
    const DensityOperator rho_c = oracle::random_density(mode2, rng);
    const DensityOperator rho_d = oracle::random_density(mode2, rng);
    Matrix mixture = 0.3 * tensor(rho_a, rho_b).matrix() + 0.7 * tensor(rho_c, rho_d).matrix();
    const DensityOperator mixed(full, std::move(mixture));
    const double joint = joint_probability(
        mixed, {{{0}, na.outcomes[2].projector}, {{1}, nb.outcomes[0].projector}});
    const double by_components = 0.3 * rho_a.matrix()(2, 2).real() * rho_b.matrix()(0, 0).real() +
                                 0.7 * rho_c.matrix()(2, 2).real() * rho_d.matrix()(0, 0).real();
    CHECK(joint == doctest::Approx(by_components).epsilon(1e-10));

    CHECK_THROWS_AS(joint_probability(mixed, {{{0}, na.outcomes[0].projector},
                                              {{0}, na.outcomes[1].projector}}),
                    std::invalid_argument);

    // The minus-superposition pair state has no double-occupancy component.
    const DensityOperator bell_minus = bell_and_ghz()[1].density();
    const ProjectorFamily qa = spectral_projectors(number_op(bell_minus.basis(), 0));
    const ProjectorFamily qb = spectral_projectors(number_op(bell_minus.basis(), 1));
    CHECK(joint_probability(bell_minus, {{{0}, qa.outcomes[1].projector},
                                         {{1}, qb.outcomes[1].projector}}) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("conditional probabilities obey Bayes consistency and no-signalling") {
    std::mt19937_64 rng(57);
    const FockBasis full({2, 2});
    const DensityOperator rho = oracle::random_density(full, rng);
    const ProjectorFamily na = spectral_projectors(number_op(full, 0));
    const ProjectorFamily nb = spectral_projectors(number_op(full, 1));

    for (std::size_t i = 0; i < na.outcomes.size(); ++i) {
        double reconstructed = 0.0;
        for (std::size_t j = 0; j < nb.outcomes.size(); ++j) {
            const double pj = outcome_probability(rho, nb.outcomes[j].projector);
            if (pj < 1e-12) continue;
            reconstructed += conditional_probability(rho, {{0}, na.outcomes[i].projector},
                                                     {{1}, nb.outcomes[j].projector}) *
                             pj;
        }
        CHECK(reconstructed ==
              doctest::Approx(outcome_probability(rho, na.outcomes[i].projector))
                  .epsilon(1e-10));
    }

    // Unrecorded measurement of B leaves every A-outcome probability and the
    // mean of any A observable unchanged.
    const DensityOperator scrambled = unrecorded_state(rho, nb);
    for (const ProjectorOutcome& outcome : na.outcomes)
        CHECK(outcome_probability(scrambled, outcome.projector) ==
              doctest::Approx(outcome_probability(rho, outcome.projector)).epsilon(1e-10));
    CHECK(expectation(scrambled, number_op(full, 0)).real() ==
          doctest::Approx(expectation(rho, number_op(full, 0)).real()).epsilon(1e-10));

    // Product states make the conditional outcome-independent.
    const DensityOperator prod =
        tensor(oracle::random_density(FockBasis({2}), rng),
               oracle::random_density(FockBasis({2}), rng));
    for (std::size_t j = 0; j < nb.outcomes.size(); ++j) {
        const double pj = outcome_probability(prod, nb.outcomes[j].projector);
        if (pj < 1e-12) continue;
        CHECK(conditional_probability(prod, {{0}, na.outcomes[1].projector},
                                      {{1}, nb.outcomes[j].projector}) ==
              doctest::Approx(outcome_probability(prod, na.outcomes[1].projector))
                  .epsilon(1e-9));
    }
}

TEST_CASE("unrecorded measurement can raise the variance of a conjugate observable") {
    const DensityOperator rho = bell_and_ghz()[0].density();
    const FockBasis& basis = rho.basis();
    const SpinFrame f = spin_frame(basis, 0, 1);
    const ProjectorFamily nb = spectral_projectors(number_op(basis, 1));

    CHECK(variance(rho, f.sx) == doctest::Approx(0.0).epsilon(1e-12));
    const DensityOperator scrambled = unrecorded_state(rho, nb);
    CHECK(variance(scrambled, f.sx) == doctest::Approx(0.25).epsilon(1e-12));
    // Means survive even though the variance jumped.
    CHECK(expectation(scrambled, f.sz).real() ==
          doctest::Approx(expectation(rho, f.sz).real()).epsilon(1e-12));
}

TEST_CASE("separable states respect the conditioned uncertainty product") {
    const SampleConfig config{2, {{0}, {1}}, {3, 3}, SampleMode::local_ssr};
    const FockBasis full({3, 3});
    const ProjectorFamily xb = spectral_projectors(position_op(full, 1));
    const ProjectorFamily pb = spectral_projectors(momentum_op(full, 1));
    const ModeOperator xa = position_op(full, 0);
    const ModeOperator pa = momentum_op(full, 0);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const DensityOperator rho = separable_state(sample_separable(seed, config));
        double avg_var_x = 0.0;
        for (std::size_t j = 0; j < xb.outcomes.size(); ++j) {
            const double pj = outcome_probability(rho, xb.outcomes[j].projector);
            if (pj < 1e-10) continue;
            avg_var_x += pj * conditional_mean_variance(rho, xa, xb, int(j)).second;
        }
        double avg_var_p = 0.0;
        for (std::size_t j = 0; j < pb.outcomes.size(); ++j) {
            const double pj = outcome_probability(rho, pb.outcomes[j].projector);
            if (pj < 1e-10) continue;
            avg_var_p += pj * conditional_mean_variance(rho, pa, pb, int(j)).second;
        }
        CAPTURE(seed);
        CHECK(avg_var_x * avg_var_p >= 0.25 - 1e-6);
    }
}

TEST_CASE("truncated quadratures keep canonical structure away from the edge") {
    const FockBasis basis({6});
    const ModeOperator x = position_op(basis, 0);
    const ModeOperator p = momentum_op(basis, 0);
    const Matrix comm = x.matrix() * p.matrix() - p.matrix() * x.matrix();
    for (int n = 0; n < 6; ++n)
        CHECK(std::abs(comm(n, n) - complex(0.0, 1.0)) < 1e-12);

    Vector vac = Vector::Zero(7);
    vac(0) = 1.0;
    const StateVector vacuum(basis, vac);
    CHECK(variance(vacuum, x) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(variance(vacuum, p) == doctest::Approx(0.5).epsilon(1e-12));
}

}  // TEST_SUITE
