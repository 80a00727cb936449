#include <algorithm>
#include <cmath>
#include <numeric>

#include "niafs/classifiers.hpp"
#include "niafs/errors.hpp"

namespace niafs::ml {

namespace detail {

// Weighted CART split search over the given rows. Candidate thresholds are
// midpoints of consecutive distinct sorted values; ties break to the lowest
// feature index, then the lowest threshold.
struct WeightedSplit {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double gain = 0.0;
};

double weighted_gini(double w0, double w1) {
    const double total = w0 + w1;
    if (total <= 0.0) return 0.0;
    const double p0 = w0 / total, p1 = w1 / total;
    return 1.0 - p0 * p0 - p1 * p1;
}

WeightedSplit find_best_split(const data::Dataset& set, const std::vector<std::size_t>& rows,
                              const std::vector<double>& row_weights,
                              const std::vector<std::size_t>& features) {
    WeightedSplit best;
    double parent_w[2] = {0.0, 0.0};
    for (std::size_t r : rows) parent_w[set.label(r)] += row_weights[r];
    const double total = parent_w[0] + parent_w[1];
    const double parent_gini = weighted_gini(parent_w[0], parent_w[1]);
    if (total <= 0.0 || parent_gini == 0.0) return best;

    std::vector<std::pair<double, std::size_t>> order(rows.size());
    for (std::size_t f : features) {
        for (std::size_t k = 0; k < rows.size(); ++k)
            order[k] = {set.at(rows[k], f), rows[k]};
        std::sort(order.begin(), order.end());

        double left_w[2] = {0.0, 0.0};
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            const std::size_t r = order[k].second;
            left_w[set.label(r)] += row_weights[r];
            if (order[k + 1].first == order[k].first) continue;

            const double lw = left_w[0] + left_w[1];
            const double rw = total - lw;
            const double gain = parent_gini -
                                (lw / total) * weighted_gini(left_w[0], left_w[1]) -
                                (rw / total) * weighted_gini(parent_w[0] - left_w[0],
                                                             parent_w[1] - left_w[1]);
            if (gain > best.gain) {
                best.found = true;
                best.gain = gain;
                best.feature = f;
                best.threshold = (order[k].first + order[k + 1].first) / 2.0;
            }
        }
    }
    return best;
}

struct TreeBuilder {
    const data::Dataset& set;
    const std::vector<double>& row_weights;
    std::size_t max_depth;
    std::size_t min_samples_split;
    std::size_t mtry;          // 0 = all features
    RngStream* rng = nullptr;  // required when mtry > 0
    std::vector<TreeNode> nodes;

    std::size_t build(std::vector<std::size_t>& rows, std::size_t depth) {
        double w[2] = {0.0, 0.0};
        for (std::size_t r : rows) w[set.label(r)] += row_weights[r];
        const double total = w[0] + w[1];

        TreeNode node;
        node.p1 = total > 0.0 ? w[1] / total : 0.0;
        node.label = w[1] > w[0] ? 1 : 0; // tie -> 0

        const bool pure = (w[0] == 0.0 || w[1] == 0.0);
        if (pure || depth >= max_depth || rows.size() < min_samples_split) {
            nodes.push_back(node);
            return nodes.size() - 1;
        }

        std::vector<std::size_t> features;
        if (mtry > 0 && mtry < set.cols()) {
            std::vector<std::size_t> all(set.cols());
            std::iota(all.begin(), all.end(), std::size_t{0});
            rng->shuffle(all);
            features.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(mtry));
            std::sort(features.begin(), features.end());
        } else {
            features.resize(set.cols());
            std::iota(features.begin(), features.end(), std::size_t{0});
        }

        const auto split = find_best_split(set, rows, row_weights, features);
        if (!split.found) {
            nodes.push_back(node);
            return nodes.size() - 1;
        }

        std::vector<std::size_t> left_rows, right_rows;
        for (std::size_t r : rows) {
            if (set.at(r, split.feature) < split.threshold) left_rows.push_back(r);
            else right_rows.push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();

        node.feature = static_cast<int>(split.feature);
        node.threshold = split.threshold;
        const std::size_t self = nodes.size();
        nodes.push_back(node);
        nodes[self].left = build(left_rows, depth + 1);
        nodes[self].right = build(right_rows, depth + 1);
        return self;
    }
};

DecisionTreeModel fit_tree_impl(const data::Dataset& train, const std::vector<std::size_t>& rows,
                                const std::vector<double>& row_weights, std::size_t max_depth,
                                std::size_t min_samples_split, std::size_t mtry, RngStream* rng) {
    TreeBuilder builder{train, row_weights, max_depth, min_samples_split, mtry, rng, {}};
    std::vector<std::size_t> work = rows;
    builder.build(work, 0);
    DecisionTreeModel model;
    model.nodes = std::move(builder.nodes);
    return model;
}

} // namespace detail

int DecisionTreeModel::predict(const double* row) const {
    std::size_t i = 0;
    while (nodes[i].feature >= 0)
        i = row[nodes[i].feature] < nodes[i].threshold ? nodes[i].left : nodes[i].right;
    return nodes[i].label;
}

double DecisionTreeModel::score(const double* row) const {
    std::size_t i = 0;
    while (nodes[i].feature >= 0)
        i = row[nodes[i].feature] < nodes[i].threshold ? nodes[i].left : nodes[i].right;
    return nodes[i].p1;
}

std::size_t DecisionTreeModel::leaf_count() const {
    std::size_t c = 0;
    for (const auto& n : nodes) c += (n.feature < 0);
    return c;
}

std::size_t DecisionTreeModel::split_count() const {
    return nodes.size() - leaf_count();
}

double gini_impurity(const std::vector<int>& labels) {
    if (labels.empty()) throw ValidationError("gini_impurity: empty input");
    double c0 = 0.0, c1 = 0.0;
    for (int y : labels) (y == 1 ? c1 : c0) += 1.0;
    return detail::weighted_gini(c0, c1);
}

SplitResult best_split(const data::Dataset& train, const std::vector<std::size_t>& feature_subset) {
    if (train.rows() < 2) throw ValidationError("best_split: need at least 2 rows");
    if (!train.has_both_classes())
        throw ValidationError("best_split: need at least 2 distinct labels");
    std::vector<std::size_t> rows(train.rows());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<double> weights(train.rows(), 1.0);
    std::vector<std::size_t> features = feature_subset;
    if (features.empty()) {
        features.resize(train.cols());
        std::iota(features.begin(), features.end(), std::size_t{0});
    }
    const auto ws = detail::find_best_split(train, rows, weights, features);
    return SplitResult{ws.found, ws.feature, ws.threshold, ws.gain};
}

DecisionTreeModel fit_decision_tree(const data::Dataset& train, std::size_t max_depth,
                                    std::size_t min_samples_split) {
    if (train.rows() == 0) throw ValidationError("fit_decision_tree: empty training set");
    std::vector<std::size_t> rows(train.rows());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<double> weights(train.rows(), 1.0);
    return detail::fit_tree_impl(train, rows, weights, max_depth, min_samples_split, 0, nullptr);
}

} // namespace niafs::ml
