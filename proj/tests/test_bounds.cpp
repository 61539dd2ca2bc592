#include "annocert/bounds.hpp"

#include "annocert/aggregation.hpp"
#include "annocert/simulator.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace annocert;
using annocert::test::column;
using annocert::test::matrix;

TEST_CASE("upper bounds on uniform agreement matrices") {
    // published pairs back-derived from the uniform off-diagonal agreement
    CHECK(std::abs(theoretical_upper_bound(uniform_agreement(3, 0.8824)) - 0.960) < 0.0011);
    CHECK(std::abs(empirical_upper_bound(uniform_agreement(3, 0.8824)) - 0.939) < 0.0011);
    CHECK(std::abs(theoretical_upper_bound(uniform_agreement(5, 0.7726)) - 0.904) < 0.0011);
    CHECK(std::abs(empirical_upper_bound(uniform_agreement(5, 0.7726)) - 0.879) < 0.0011);
    CHECK(std::abs(empirical_upper_bound(uniform_agreement(3, 0.4356)) - 0.660) < 0.0011);
    CHECK(std::abs(theoretical_upper_bound(uniform_agreement(3, 0.4356)) - 0.790) < 0.0011);

    CHECK(theoretical_upper_bound(uniform_agreement(4, 1.0)) == 1.0);
    CHECK(empirical_upper_bound(uniform_agreement(4, 1.0)) == 1.0);
}

TEST_CASE("empirical bound never exceeds theoretical bound") {
    for (double p : {0.2, 0.5, 0.8, 0.95, 1.0}) {
        for (Eigen::Index k : {2, 3, 5, 10}) {
            const auto v = uniform_agreement(k, p);
            const double ut = theoretical_upper_bound(v);
            const double ue = empirical_upper_bound(v);
            CHECK(ue <= ut + 1e-15);
            if (p < 1.0) CHECK(ue < ut);
        }
    }
}

TEST_CASE("count-backed bounds match the value-backed ones") {
    const auto m = matrix({{0, 0, 0}, {0, 1, 0}, {1, 1, 1}, {2, 2, 0}, {0, 0, 0}}, 3);
    const auto am = agreement_matrix(m);
    CHECK(theoretical_upper_bound(am) == doctest::Approx(theoretical_upper_bound(am.values())).epsilon(1e-15));
    CHECK(empirical_upper_bound(am) == doctest::Approx(empirical_upper_bound(am.values())).epsilon(1e-15));
}

TEST_CASE("convergence ratio closed form") {
    CHECK(convergence_ratio(7, 1.0) == 1.0);
    CHECK(convergence_ratio(10, 0.8) == doctest::Approx(std::sqrt(8.2 / 8.0)).epsilon(1e-10));
    CHECK(convergence_ratio(2, 0.5) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));
    CHECK_THROWS_AS(convergence_ratio(5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(convergence_ratio(1, 0.5), std::invalid_argument);
}

TEST_CASE("closed-form ratio equals the two-sum ratio to 1e-12") {
    for (double p : {0.34, 0.5, 0.8, 0.99}) {
        for (Eigen::Index k : {2, 5, 17, 50}) {
            const auto v = uniform_agreement(k, p);
            const double two_sum = theoretical_upper_bound(v) / empirical_upper_bound(v);
            CHECK(std::abs(convergence_ratio(k, p) - two_sum) < 1e-12);
        }
    }
}

TEST_CASE("lower bound") {
    const auto ref = column({0, 1, 0, 1}, "aggregate");
    const auto model = column({0, 1, 1, 1}, "model");
    CHECK(lower_bound(ref, model) == doctest::Approx(0.75));
    CHECK(lower_bound(ref, ref) == 1.0);
    CHECK(lower_bound(ref, model) == lower_bound(model, ref));
}

TEST_CASE("lower bound stays below the model oracle accuracy when the assumption holds") {
    SimulationConfig cfg;
    cfg.n_samples = 50000;
    cfg.n_classes = 3;
    cfg.seed = 5;
    cfg.model_accuracy = 0.92;
    for (int k = 0; k < 5; ++k)
        cfg.annotators.push_back({AnnotatorKind::ConditionalIndependent, 0.8, 0, 0, 0});
    const auto ds = simulate(cfg);
    const auto vote = majority_vote(ds.annotations);
    const double l_n = lower_bound(vote, *ds.model);
    const double model_acc = pairwise_agreement(*ds.model, *ds.oracle);
    const double sigma = std::sqrt(0.25 / static_cast<double>(cfg.n_samples));
    CHECK(l_n <= model_acc + 3.0 * sigma);
}

TEST_CASE("bounds report") {
    const auto m = matrix({{0, 0, 0}, {0, 1, 0}, {1, 1, 1}, {2, 2, 0}}, 3);
    const auto vote = majority_vote(m);

    SUBCASE("model equal to the reference maximizes the margin") {
        LabelColumn model = vote;
        model.source_id = "model";
        const auto r = bounds_report(m, model, vote);
        CHECK(*r.l_model == 1.0);
        CHECK(*r.margin == doctest::Approx(1.0 - r.u_empirical));
        CHECK(r.u_empirical <= r.u_theoretical);
        CHECK(r.u_theoretical >= std::sqrt(1.0 / static_cast<double>(r.k)));
        CHECK(r.reference_id == "aggregate");
    }

    SUBCASE("no model column gives a bounds-only report") {
        const auto r = bounds_report(m, std::nullopt, vote);
        CHECK_FALSE(r.l_model.has_value());
        CHECK_FALSE(r.margin.has_value());
        CHECK(r.u_theoretical > 0.0);
    }
}

TEST_CASE("weak simulated model yields a negative margin") {
    SimulationConfig cfg;
    cfg.n_samples = 20000;
    cfg.n_classes = 3;
    cfg.seed = 9;
    cfg.model_accuracy = 0.5;  // well below the annotator pool
    for (int k = 0; k < 5; ++k)
        cfg.annotators.push_back({AnnotatorKind::ConditionalIndependent, 0.85, 0, 0, 0});
    const auto ds = simulate(cfg);
    const auto r = bounds_report(ds.annotations, ds.model, majority_vote(ds.annotations));
    CHECK(*r.margin < 0.0);
}
