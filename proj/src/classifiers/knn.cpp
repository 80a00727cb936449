#include <algorithm>
#include <cmath>
#include <numeric>

#include "niafs/classifiers.hpp"
#include "niafs/errors.hpp"

namespace niafs::ml {

namespace {

struct Neighbour {
    double dist2;
    std::size_t index;
};

std::vector<Neighbour> k_nearest(const data::Dataset& train, const double* row, std::size_t k) {
    const std::size_t n = train.rows();
    const std::size_t d = train.cols();
    std::vector<Neighbour> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* t = train.row(i);
        double s = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            const double diff = t[c] - row[c];
            s += diff * diff;
        }
        all[i] = {s, i};
    }
    auto cmp = [](const Neighbour& a, const Neighbour& b) {
        return a.dist2 != b.dist2 ? a.dist2 < b.dist2 : a.index < b.index;
    };
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), cmp);
    all.resize(k);
    return all;
}

int vote(const data::Dataset& train, const std::vector<Neighbour>& nearest) {
    std::size_t count[2] = {0, 0};
    double dist_sum[2] = {0.0, 0.0};
    for (const auto& nb : nearest) {
        const int y = train.label(nb.index);
        ++count[y];
        dist_sum[y] += std::sqrt(nb.dist2);
    }
    if (count[0] != count[1]) return count[1] > count[0] ? 1 : 0;
    if (dist_sum[0] != dist_sum[1]) return dist_sum[1] < dist_sum[0] ? 1 : 0;
    return 0;
}

} // namespace

int knn_classify(const data::Dataset& train, const std::vector<double>& test_row, std::size_t k) {
    if (train.rows() == 0) throw ValidationError("knn_classify: empty training set");
    if (k < 1 || k > train.rows())
        throw ValidationError("knn_classify: k must lie in [1, train size]");
    if (test_row.size() != train.cols())
        throw DimensionError("knn_classify: query length != feature count");
    return vote(train, k_nearest(train, test_row.data(), k));
}

namespace detail {

// Shared with the factory wrapper.
int knn_predict_row(const data::Dataset& train, const double* row, std::size_t k) {
    return vote(train, k_nearest(train, row, k));
}

double knn_score_row(const data::Dataset& train, const double* row, std::size_t k) {
    const auto nearest = k_nearest(train, row, k);
    std::size_t ones = 0;
    for (const auto& nb : nearest) ones += static_cast<std::size_t>(train.label(nb.index));
    return static_cast<double>(ones) / static_cast<double>(k);
}

} // namespace detail

} // namespace niafs::ml
