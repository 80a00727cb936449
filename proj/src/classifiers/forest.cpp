#include <cmath>
#include <numeric>

#include "niafs/classifiers.hpp"
#include "niafs/errors.hpp"

namespace niafs::ml {

namespace detail {
DecisionTreeModel fit_tree_impl(const data::Dataset& train, const std::vector<std::size_t>& rows,
                                const std::vector<double>& row_weights, std::size_t max_depth,
                                std::size_t min_samples_split, std::size_t mtry, RngStream* rng);
}

int RandomForestModel::predict(const double* row) const {
    std::size_t ones = 0;
    for (const auto& t : trees) ones += static_cast<std::size_t>(t.predict(row));
    const std::size_t zeros = trees.size() - ones;
    return ones > zeros ? 1 : 0; // tie -> 0
}

double RandomForestModel::score(const double* row) const {
    std::size_t ones = 0;
    for (const auto& t : trees) ones += static_cast<std::size_t>(t.predict(row));
    return static_cast<double>(ones) / static_cast<double>(trees.size());
}

RandomForestModel fit_random_forest(const data::Dataset& train, std::size_t n_trees, RFMode mode,
                                    RngStream rng) {
    if (n_trees < 1) throw ValidationError("fit_random_forest: n_trees must be >= 1");
    if (train.rows() == 0) throw ValidationError("fit_random_forest: empty training set");
    const std::size_t n = train.rows();
    const auto mtry = static_cast<std::size_t>(
        std::max(1.0, std::floor(std::sqrt(static_cast<double>(train.cols())))));

    // Class index pools for balanced bootstrap draws.
    std::vector<std::size_t> pool[2];
    for (std::size_t r = 0; r < n; ++r) pool[train.label(r)].push_back(r);
    const bool both = !pool[0].empty() && !pool[1].empty();

    // Balanced mode: inverse class frequency on the full training set.
    std::vector<double> full_weights(n, 1.0);
    if (mode == RFMode::Balanced && both) {
        const double w0 = static_cast<double>(n) / (2.0 * static_cast<double>(pool[0].size()));
        const double w1 = static_cast<double>(n) / (2.0 * static_cast<double>(pool[1].size()));
        for (std::size_t r = 0; r < n; ++r) full_weights[r] = train.label(r) == 1 ? w1 : w0;
    }

    RandomForestModel model;
    model.mode = mode;
    model.trees.reserve(n_trees);
    for (std::size_t t = 0; t < n_trees; ++t) {
        RngStream tree_rng = rng.derive(t);

        std::vector<std::size_t> sample(n);
        if (mode == RFMode::BalancedSubsample && both) {
            // Class-balanced bootstrap: alternate classes across the draw.
            for (std::size_t i = 0; i < n; ++i) {
                const auto& p = pool[i % 2];
                sample[i] = p[tree_rng.index(p.size())];
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) sample[i] = tree_rng.index(n);
        }

        std::vector<double> weights = full_weights;
        if (mode == RFMode::BalancedSubsample && both) {
            // Inverse class frequency recomputed on this bootstrap sample.
            std::size_t c[2] = {0, 0};
            for (std::size_t r : sample) ++c[train.label(r)];
            const double total = static_cast<double>(sample.size());
            for (std::size_t r = 0; r < n; ++r) {
                const std::size_t cls = static_cast<std::size_t>(train.label(r));
                weights[r] = c[cls] > 0 ? total / (2.0 * static_cast<double>(c[cls])) : 1.0;
            }
        }

        model.trees.push_back(detail::fit_tree_impl(train, sample, weights, kUnlimitedDepth, 2,
                                                    mtry, &tree_rng));
    }
    return model;
}

} // namespace niafs::ml
