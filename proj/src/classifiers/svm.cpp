#include <algorithm>
#include <cmath>
#include <numeric>

#include "niafs/classifiers.hpp"
#include "niafs/errors.hpp"

namespace niafs::ml {

namespace {

double kernel_eval(const double* a, const double* b, std::size_t d, bool linear, double gamma) {
    if (linear) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
        return s;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return std::exp(-gamma * s);
}

} // namespace

double SvmModel::decision(const double* row) const {
    double s = bias;
    for (std::size_t i = 0; i < support_vectors.size(); ++i)
        s += dual_coef[i] * kernel_eval(support_vectors[i].data(), row, support_vectors[i].size(),
                                        linear, gamma);
    return s;
}

int SvmModel::predict(const double* row) const {
    if (constant_class >= 0) return constant_class;
    return decision(row) >= 0.0 ? 1 : 0;
}

SvmModel fit_svm_smo(const data::Dataset& train, double C, bool linear, double gamma, double tol,
                     std::size_t max_passes, RngStream rng, std::size_t sweep_cap) {
    if (train.rows() == 0) throw ValidationError("fit_svm_smo: empty training set");
    if (!(C > 0.0)) throw ValidationError("fit_svm_smo: C must be > 0");
    const std::size_t n = train.rows();
    const std::size_t d = train.cols();

    SvmModel model;
    model.linear = linear;
    if (!train.has_both_classes()) {
        model.constant_class = train.label(0);
        return model;
    }

    if (gamma <= 0.0) {
        // 1 / (d * var(X)) over the flattened matrix.
        double mean = 0.0;
        for (double v : train.features()) mean += v;
        mean /= static_cast<double>(train.features().size());
        double var = 0.0;
        for (double v : train.features()) var += (v - mean) * (v - mean);
        var /= static_cast<double>(train.features().size());
        gamma = var > 0.0 ? 1.0 / (static_cast<double>(d) * var) : 1.0;
    }
    model.gamma = gamma;

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = train.label(i) == 1 ? 1.0 : -1.0;

    // Kernel cache for desk-scale problems; recompute above that.
    const bool cache = n <= 2000;
    std::vector<double> K;
    if (cache) {
        K.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = kernel_eval(train.row(i), train.row(j), d, linear, gamma);
                K[i * n + j] = v;
                K[j * n + i] = v;
            }
    }
    auto kernel = [&](std::size_t i, std::size_t j) {
        return cache ? K[i * n + j] : kernel_eval(train.row(i), train.row(j), d, linear, gamma);
    };

    std::vector<double> alpha(n, 0.0);
    double b = 0.0;
    auto decision_on_train = [&](std::size_t i) {
        double s = b;
        for (std::size_t k = 0; k < n; ++k)
            if (alpha[k] > 0.0) s += alpha[k] * y[k] * kernel(k, i);
        return s;
    };

    std::size_t quiet_passes = 0, sweeps = 0;
    while (quiet_passes < max_passes && sweeps < sweep_cap) {
        std::size_t changed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double Ei = decision_on_train(i) - y[i];
            if (!((y[i] * Ei < -tol && alpha[i] < C) || (y[i] * Ei > tol && alpha[i] > 0.0)))
                continue;

            std::size_t j = rng.index(n - 1);
            if (j >= i) ++j;
            const double Ej = decision_on_train(j) - y[j];

            const double ai_old = alpha[i], aj_old = alpha[j];
            double L, H;
            if (y[i] != y[j]) {
                L = std::max(0.0, aj_old - ai_old);
                H = std::min(C, C + aj_old - ai_old);
            } else {
                L = std::max(0.0, ai_old + aj_old - C);
                H = std::min(C, ai_old + aj_old);
            }
            if (L >= H) continue;
            const double eta = 2.0 * kernel(i, j) - kernel(i, i) - kernel(j, j);
            if (eta >= 0.0) continue;

            double aj = aj_old - y[j] * (Ei - Ej) / eta;
            aj = std::clamp(aj, L, H);
            if (std::fabs(aj - aj_old) < 1e-5) continue;
            const double ai = ai_old + y[i] * y[j] * (aj_old - aj);
            alpha[i] = ai;
            alpha[j] = aj;

            const double b1 = b - Ei - y[i] * (ai - ai_old) * kernel(i, i) -
                              y[j] * (aj - aj_old) * kernel(i, j);
            const double b2 = b - Ej - y[i] * (ai - ai_old) * kernel(i, j) -
                              y[j] * (aj - aj_old) * kernel(j, j);
            if (ai > 0.0 && ai < C) b = b1;
            else if (aj > 0.0 && aj < C) b = b2;
            else b = (b1 + b2) / 2.0;
            ++changed;
        }
        quiet_passes = changed == 0 ? quiet_passes + 1 : 0;
        ++sweeps;
    }
    model.convergence_flag = quiet_passes >= max_passes;

    model.bias = b;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] <= 1e-12) continue;
        model.support_vectors.emplace_back(train.row(i), train.row(i) + d);
        model.dual_coef.push_back(alpha[i] * y[i]);
    }
    return model;
}

} // namespace niafs::ml
