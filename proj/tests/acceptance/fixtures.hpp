#pragma once

#include <vector>

#include "niafs/dataset.hpp"
#include "niafs/optimize.hpp"
#include "niafs/rng.hpp"

namespace niafs::accept {

// n x d uniform features; the label is 1 when the informative features sum
// past their midpoint, with a margin band resampled away so the rule is
// separable. Everything else is noise.
data::Dataset planted_dataset(std::size_t n, std::size_t d,
                              const std::vector<std::size_t>& informative, double margin,
                              std::uint64_t seed);

// Labels independent of the features (coin flips).
data::Dataset noise_dataset(std::size_t n, std::size_t d, std::uint64_t seed);

// Independent equal-budget baseline: uniform sampling, best-of-budget.
double random_search(const opt::Objective& objective, const opt::SearchSpace& space,
                     std::size_t budget, RngStream rng);

double median(std::vector<double> values);

} // namespace niafs::accept
