#include "niafs/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "niafs/errors.hpp"

namespace niafs::ml {

namespace {

void require_paired(const std::vector<int>& predicted, const std::vector<int>& actual,
                    const char* what) {
    if (predicted.size() != actual.size())
        throw ValidationError(std::string(what) + ": predicted/actual length mismatch");
    if (predicted.empty()) throw ValidationError(std::string(what) + ": empty input");
}

} // namespace

double metric_accuracy(const std::vector<int>& predicted, const std::vector<int>& actual) {
    require_paired(predicted, actual, "metric_accuracy");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        if (predicted[i] == actual[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

double metric_f1(const std::vector<int>& predicted, const std::vector<int>& actual,
                 int positive_label) {
    require_paired(predicted, actual, "metric_f1");
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool pred_pos = predicted[i] == positive_label;
        const bool act_pos = actual[i] == positive_label;
        if (pred_pos && act_pos) ++tp;
        else if (pred_pos && !act_pos) ++fp;
        else if (!pred_pos && act_pos) ++fn;
    }
    const double denom = static_cast<double>(2 * tp + fp + fn);
    return denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
}

double metric_auc(const std::vector<double>& scores, const std::vector<int>& actual) {
    if (scores.size() != actual.size())
        throw ValidationError("metric_auc: scores/actual length mismatch");
    std::size_t n_pos = 0, n_neg = 0;
    for (int y : actual) (y == 1 ? n_pos : n_neg)++;
    if (n_pos == 0 || n_neg == 0)
        throw ValidationError("metric_auc: undefined for single-class actuals");

    // Average ranks with midrank tie handling.
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    std::vector<double> rank(scores.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
        i = j + 1;
    }
    double pos_rank_sum = 0.0;
    for (std::size_t k = 0; k < actual.size(); ++k)
        if (actual[k] == 1) pos_rank_sum += rank[k];
    const double np = static_cast<double>(n_pos), nn = static_cast<double>(n_neg);
    return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

ConfusionMatrix confusion_matrix(const std::vector<int>& predicted,
                                 const std::vector<int>& actual) {
    require_paired(predicted, actual, "confusion_matrix");
    ConfusionMatrix m{};
    for (std::size_t i = 0; i < predicted.size(); ++i)
        ++m[static_cast<std::size_t>(actual[i])][static_cast<std::size_t>(predicted[i])];
    return m;
}

} // namespace niafs::ml
