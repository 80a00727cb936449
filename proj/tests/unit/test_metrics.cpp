#include <doctest.h>

#include "niafs/errors.hpp"
#include "niafs/metrics.hpp"

using namespace niafs;
using namespace niafs::ml;

TEST_CASE("accuracy counts exact matches") {
    CHECK(metric_accuracy({1, 0, 1}, {1, 0, 1}) == 1.0);
    CHECK(metric_accuracy({1, 1, 0}, {1, 0, 0}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(metric_accuracy({1, 1}, {0, 0}) == 0.0);
    CHECK_THROWS_AS(metric_accuracy({1}, {1, 0}), ValidationError);
    CHECK_THROWS_AS(metric_accuracy({}, {}), ValidationError);
}

TEST_CASE("accuracy complement identity") {
    const std::vector<int> p = {1, 0, 1, 1, 0, 0, 1};
    const std::vector<int> a = {1, 1, 0, 1, 0, 1, 1};
    std::vector<int> flipped(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) flipped[i] = 1 - p[i];
    CHECK(metric_accuracy(p, a) + metric_accuracy(flipped, a) == doctest::Approx(1.0));
}

TEST_CASE("f1 matches hand computation") {
    CHECK(metric_f1({1, 1, 0}, {1, 1, 0}, 1) == 1.0);
    // TP=2, FP=1, FN=1 -> precision = recall = 2/3 -> F1 = 2/3
    CHECK(metric_f1({1, 1, 1, 0}, {1, 1, 0, 1}, 1) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    // no positive predictions, no positive actuals -> 0 by convention
    CHECK(metric_f1({0, 0}, {0, 0}, 1) == 0.0);
    CHECK_THROWS_AS(metric_f1({1}, {1, 0}, 1), ValidationError);
}

TEST_CASE("auc handles perfect, inverted and tied rankings") {
    CHECK(metric_auc({0.9, 0.8, 0.3, 0.1}, {1, 1, 0, 0}) == 1.0);
    CHECK(metric_auc({0.9, 0.1}, {0, 1}) == 0.0);
    CHECK(metric_auc({0.5, 0.5, 0.5, 0.5}, {1, 0, 1, 0}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(metric_auc({0.5, 0.6}, {1, 1}), ValidationError);
}

TEST_CASE("auc is invariant under strictly monotone transforms") {
    const std::vector<double> scores = {0.1, 0.7, 0.4, 0.9, 0.2, 0.6};
    const std::vector<int> actual = {0, 1, 0, 1, 1, 0};
    const double base = metric_auc(scores, actual);
    std::vector<double> cubed(scores.size()), shifted(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        cubed[i] = scores[i] * scores[i] * scores[i];
        shifted[i] = 100.0 * scores[i] - 3.0;
    }
    CHECK(metric_auc(cubed, actual) == doctest::Approx(base).epsilon(1e-12));
    CHECK(metric_auc(shifted, actual) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("confusion matrix entries sum to n") {
    const std::vector<int> p = {1, 0, 1, 0, 1};
    const std::vector<int> a = {1, 1, 0, 0, 1};
    const auto m = confusion_matrix(p, a);
    CHECK(m[0][0] + m[0][1] + m[1][0] + m[1][1] == 5);
    CHECK(m[1][1] == 2); // true positives
    CHECK(m[0][1] == 1); // false positives
    CHECK(m[1][0] == 1); // false negatives
    const double acc = metric_accuracy(p, a);
    CHECK(acc == doctest::Approx(static_cast<double>(m[0][0] + m[1][1]) / 5.0));
}
