#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace niafs::accept {

data::Dataset planted_dataset(std::size_t n, std::size_t d,
                              const std::vector<std::size_t>& informative, double margin,
                              std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<double> features(n * d);
    std::vector<int> labels(n);
    const double cut = 0.5 * static_cast<double>(informative.size());
    const double band = margin * static_cast<double>(informative.size());
    for (std::size_t r = 0; r < n; ++r) {
        double signal;
        do {
            signal = 0.0;
            for (std::size_t c : informative) {
                features[r * d + c] = rng.uniform();
                signal += features[r * d + c];
            }
        } while (std::fabs(signal - cut) < band);
        labels[r] = signal > cut ? 1 : 0;
        for (std::size_t c = 0; c < d; ++c) {
            if (std::find(informative.begin(), informative.end(), c) == informative.end())
                features[r * d + c] = rng.uniform();
        }
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
    return data::Dataset::make(std::move(features), std::move(labels), std::move(names));
}

data::Dataset noise_dataset(std::size_t n, std::size_t d, std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<double> features(n * d);
    std::vector<int> labels(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) features[r * d + c] = rng.uniform();
        labels[r] = rng.uniform() < 0.5 ? 0 : 1;
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
    return data::Dataset::make(std::move(features), std::move(labels), std::move(names));
}

double random_search(const opt::Objective& objective, const opt::SearchSpace& space,
                     std::size_t budget, RngStream rng) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> x(space.dimension);
    for (std::size_t e = 0; e < budget; ++e) {
        for (std::size_t i = 0; i < space.dimension; ++i)
            x[i] = rng.uniform(space.lower[i], space.upper[i]);
        best = std::min(best, objective.evaluate(x));
    }
    return best;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace niafs::accept
