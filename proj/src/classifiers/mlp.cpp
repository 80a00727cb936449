#include <algorithm>
#include <cmath>
#include <numeric>

#include "niafs/classifiers.hpp"
#include "niafs/errors.hpp"

namespace niafs::ml {

namespace {

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Activations per layer for one row; activations[0] is the input.
std::vector<std::vector<double>> forward_pass(const MlpModel& model, const double* row) {
    std::vector<std::vector<double>> acts(model.layer_sizes.size());
    acts[0].assign(row, row + model.layer_sizes[0]);
    for (std::size_t l = 0; l + 1 < model.layer_sizes.size(); ++l) {
        const std::size_t in = model.layer_sizes[l];
        const std::size_t out = model.layer_sizes[l + 1];
        const auto& W = model.weights[l];
        acts[l + 1].resize(out);
        for (std::size_t u = 0; u < out; ++u) {
            double z = W[u * (in + 1) + in]; // bias
            for (std::size_t v = 0; v < in; ++v) z += W[u * (in + 1) + v] * acts[l][v];
            acts[l + 1][u] = sigmoid(z);
        }
    }
    return acts;
}

constexpr double kProbFloor = 1e-12;

} // namespace

double MlpModel::forward(const double* row) const {
    // Iterative pass without keeping intermediate layers.
    std::vector<double> cur(row, row + layer_sizes[0]);
    std::vector<double> next;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const std::size_t in = layer_sizes[l];
        const std::size_t out = layer_sizes[l + 1];
        next.assign(out, 0.0);
        for (std::size_t u = 0; u < out; ++u) {
            double z = weights[l][u * (in + 1) + in];
            for (std::size_t v = 0; v < in; ++v) z += weights[l][u * (in + 1) + v] * cur[v];
            next[u] = sigmoid(z);
        }
        cur.swap(next);
    }
    return cur[0];
}

double mlp_loss(const MlpModel& model, const data::Dataset& rows,
                const std::vector<std::size_t>& batch) {
    double loss = 0.0;
    for (std::size_t r : batch) {
        double p = model.forward(rows.row(r));
        p = std::clamp(p, kProbFloor, 1.0 - kProbFloor);
        const double target = rows.label(r);
        loss += -(target * std::log(p) + (1.0 - target) * std::log(1.0 - p));
    }
    return loss / static_cast<double>(batch.size());
}

std::vector<std::vector<double>> mlp_gradients(const MlpModel& model, const data::Dataset& rows,
                                               const std::vector<std::size_t>& batch) {
    std::vector<std::vector<double>> grads(model.weights.size());
    for (std::size_t l = 0; l < grads.size(); ++l)
        grads[l].assign(model.weights[l].size(), 0.0);

    const std::size_t layers = model.layer_sizes.size();
    for (std::size_t r : batch) {
        const auto acts = forward_pass(model, rows.row(r));
        // Output delta for sigmoid + cross-entropy: p - y.
        std::vector<double> delta = {acts.back()[0] - static_cast<double>(rows.label(r))};
        for (std::size_t l = layers - 1; l-- > 0;) {
            const std::size_t in = model.layer_sizes[l];
            const std::size_t out = model.layer_sizes[l + 1];
            auto& G = grads[l];
            for (std::size_t u = 0; u < out; ++u) {
                for (std::size_t v = 0; v < in; ++v)
                    G[u * (in + 1) + v] += delta[u] * acts[l][v];
                G[u * (in + 1) + in] += delta[u];
            }
            if (l == 0) break;
            std::vector<double> prev_delta(in, 0.0);
            for (std::size_t v = 0; v < in; ++v) {
                double s = 0.0;
                for (std::size_t u = 0; u < out; ++u)
                    s += model.weights[l][u * (in + 1) + v] * delta[u];
                prev_delta[v] = s * acts[l][v] * (1.0 - acts[l][v]);
            }
            delta.swap(prev_delta);
        }
    }
    const double inv = 1.0 / static_cast<double>(batch.size());
    for (auto& G : grads)
        for (double& g : G) g *= inv;
    return grads;
}

MlpModel fit_mlp(const data::Dataset& train, std::size_t epochs, double learning_rate,
                 RngStream rng, std::size_t batch_size) {
    if (train.rows() == 0) throw ValidationError("fit_mlp: empty training set");
    if (batch_size < 1) throw ValidationError("fit_mlp: batch size must be >= 1");

    MlpModel model;
    model.layer_sizes = {train.cols(), 6, 6, 1};
    model.weights.resize(model.layer_sizes.size() - 1);
    for (std::size_t l = 0; l + 1 < model.layer_sizes.size(); ++l) {
        const std::size_t in = model.layer_sizes[l];
        const std::size_t out = model.layer_sizes[l + 1];
        auto& W = model.weights[l];
        W.assign(out * (in + 1), 0.0);
        const double bound = 1.0 / std::sqrt(static_cast<double>(in));
        for (std::size_t u = 0; u < out; ++u)
            for (std::size_t v = 0; v < in; ++v)
                W[u * (in + 1) + v] = rng.uniform(-bound, bound);
        // biases start at zero
    }

    std::vector<std::size_t> order(train.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> batch;
    for (std::size_t e = 0; e < epochs; ++e) {
        rng.shuffle(order);
        for (std::size_t start = 0; start < order.size(); start += batch_size) {
            const std::size_t stop = std::min(order.size(), start + batch_size);
            batch.assign(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(stop));
            const auto grads = mlp_gradients(model, train, batch);
            for (std::size_t l = 0; l < model.weights.size(); ++l)
                for (std::size_t w = 0; w < model.weights[l].size(); ++w)
                    model.weights[l][w] -= learning_rate * grads[l][w];
        }
    }
    return model;
}

} // namespace niafs::ml
