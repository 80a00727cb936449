#pragma once

#include <array>
#include <vector>

namespace niafs::ml {

// confusion[actual][predicted], binary labels.
using ConfusionMatrix = std::array<std::array<std::size_t, 2>, 2>;

struct Metrics {
    double accuracy = 0.0;
    double f1 = 0.0;
    double auc = 0.0;
    ConfusionMatrix confusion{};
};

double metric_accuracy(const std::vector<int>& predicted, const std::vector<int>& actual);

// Harmonic mean of precision and recall for positive_label; 0 when
// precision + recall is 0.
double metric_f1(const std::vector<int>& predicted, const std::vector<int>& actual,
                 int positive_label = 1);

// Rank-based (Mann-Whitney) AUC, ties count half. Requires both classes.
double metric_auc(const std::vector<double>& scores, const std::vector<int>& actual);

ConfusionMatrix confusion_matrix(const std::vector<int>& predicted,
                                 const std::vector<int>& actual);

} // namespace niafs::ml
