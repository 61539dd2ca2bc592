#include "annocert/agreement.hpp"

#include "annocert/simulator.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace annocert;
using annocert::test::column;
using annocert::test::matrix;

TEST_CASE("pairwise agreement") {
    CHECK(pairwise_agreement(column({0, 1, 2, 0}), column({0, 1, 2, 0})) == 1.0);
    CHECK(pairwise_agreement(column({0, 0, 1, 1}), column({1, 1, 0, 0})) == 0.0);
    CHECK(pairwise_agreement(column({0, 1, 2, 0, 1}), column({0, 1, 1, 0, 2})) == doctest::Approx(0.6));
    CHECK_THROWS_AS(pairwise_agreement(column({0, 1}), column({0})), std::invalid_argument);
    CHECK_THROWS_AS(pairwise_agreement(column({}), column({})), std::invalid_argument);
}

TEST_CASE("agreement matrix on a constructed 10-row, K=3 dataset") {
    // pairs agree on 8/10, 6/10, 7/10 samples
    const auto m = matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                           {0, 1, 2}, {1, 0, 0}, {0, 0, 1}, {0, 0, 1}},
                          3);
    const auto am = agreement_matrix(m);
    CHECK(am.value(0, 0) == 1.0);
    CHECK(am.value(1, 1) == 1.0);
    CHECK(am.value(0, 1) == doctest::Approx(0.8));
    CHECK(am.value(0, 2) == doctest::Approx(0.6));
    CHECK(am.value(1, 2) == doctest::Approx(0.7));
    CHECK(am.counts() == am.counts().transpose().eval());
}

TEST_CASE("identical columns give the all-ones matrix") {
    const auto m = matrix({{0, 0}, {1, 1}, {2, 2}}, 3);
    const auto am = agreement_matrix(m);
    CHECK(am.values() == Eigen::MatrixXd::Ones(2, 2));
}

TEST_CASE("sample permutation and class relabeling leave agreement unchanged") {
    std::mt19937 gen(7);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 50; ++i) {
        rows.push_back({static_cast<int>(gen() % 3), static_cast<int>(gen() % 3),
                        static_cast<int>(gen() % 3)});
    }
    const auto base = agreement_matrix(matrix(rows, 3)).counts();

    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    CHECK(agreement_matrix(matrix(shuffled, 3)).counts() == base);

    const int perm[3] = {2, 0, 1};
    auto relabeled = rows;
    for (auto& r : relabeled)
        for (auto& v : r) v = perm[v];
    CHECK(agreement_matrix(matrix(relabeled, 3)).counts() == base);
}

TEST_CASE("constant vs near-uniform annotator: agreement tracks class frequency") {
    // One annotator always answers class 0, the other is correct with
    // probability 1/2 on a 2-class task with uniform prior. Their agreement
    // is then the frequency of the second annotator emitting class 0, which
    // has expectation 1/2.
    SimulationConfig cfg;
    cfg.n_samples = 1000;
    cfg.n_classes = 2;
    cfg.seed = 11;
    cfg.annotators = {{AnnotatorKind::ConditionalIndependent, 1.0, 0, 0, 0},
                      {AnnotatorKind::ConditionalIndependent, 0.5, 0, 0, 0}};
    auto ds = simulate(cfg);
    Eigen::MatrixXi labels = ds.annotations.labels();
    labels.col(0).setZero();  // make annotator 1 constant
    const auto constant = AnnotationMatrix(labels, ds.annotations.annotator_ids(),
                                           ds.annotations.sample_ids(), ds.annotations.vocabulary());
    const double freq0 =
        static_cast<double>((labels.col(1).array() == 0).count()) / static_cast<double>(labels.rows());
    const auto am = agreement_matrix(constant);
    CHECK(am.value(0, 1) == doctest::Approx(freq0));
    CHECK(std::abs(am.value(0, 1) - 0.5) < 3.0 * std::sqrt(0.25 / 1000.0));
}

TEST_CASE("agreement matrix invariants are enforced") {
    Eigen::MatrixXi bad(2, 2);
    bad << 10, 3, 4, 10;  // asymmetric
    CHECK_THROWS_AS(AgreementMatrix(bad, 10, {"a", "b"}), std::invalid_argument);
    Eigen::MatrixXi diag(2, 2);
    diag << 9, 3, 3, 10;  // diagonal != N
    CHECK_THROWS_AS(AgreementMatrix(diag, 10, {"a", "b"}), std::invalid_argument);
}
