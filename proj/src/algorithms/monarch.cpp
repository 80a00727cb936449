#include <algorithm>
#include <cmath>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_monarch(AlgorithmState& state, const Params&) {
    state.scratch = MboScratch{};
}

void step_monarch(AlgorithmState& state, const Params& p, Evaluator& eval,
                  const SearchSpace& space, RngStream& rng) {
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;
    const double ratio = p("partition_ratio");
    const double period = p("migration_period");
    const double adjusting_rate = p("adjusting_rate");

    // Walk step decays as max_step / t; the classical 1/t^2 schedule kills
    // the perturbation before the coordinate pool has converged.
    const auto t = static_cast<double>(state.generation + 1);
    const double walk_alpha = p("max_step") / t;

    // Sorted split: the fitter share populates land 1.
    auto order = rank_by_fitness(state.fitnesses);
    const auto np1 = static_cast<std::size_t>(
        std::ceil(ratio * static_cast<double>(n)));
    std::vector<std::size_t> land1(order.begin(), order.begin() + np1);
    std::vector<std::size_t> land2(order.begin() + np1, order.end());
    if (land2.empty()) land2 = land1;

    std::vector<std::vector<double>> next_pos(n);
    std::vector<double> next_fit(n, 0.0);

    // Migration: land-1 offspring mix coordinates from both lands.
    for (std::size_t k = 0; k < np1; ++k) {
        std::vector<double> child(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const double r = rng.uniform() * period;
            const auto& pool = (r <= ratio) ? land1 : land2;
            child[d] = state.positions[pool[rng.index(pool.size())]][d];
        }
        next_pos[k] = std::move(child);
    }

    // Adjusting: land-2 offspring copy from the incumbent or from land 2,
    // with an occasional Levy nudge.
    for (std::size_t k = np1; k < n; ++k) {
        std::vector<double> child(dim);
        const auto walk = levy_flight_step(1.5, 1.0, rng, dim);
        for (std::size_t d = 0; d < dim; ++d) {
            if (rng.uniform() <= ratio) {
                child[d] = state.best_position[d];
            } else {
                child[d] = state.positions[land2[rng.index(land2.size())]][d];
                if (rng.uniform() > adjusting_rate)
                    child[d] += walk_alpha * (walk[d] - 0.5);
            }
        }
        next_pos[k] = std::move(child);
    }

    for (std::size_t k = 0; k < n; ++k) {
        next_pos[k] = opt::clamp_to_bounds(next_pos[k], space);
        double f;
        if (!try_eval(eval, state, next_pos[k], f)) return;
        next_fit[k] = f;
    }

    // Elitist truncation over parents + offspring (keep at minimum the
    // configured elite count from the parents, fill the rest by rank).
    std::vector<std::vector<double>> pool_pos = std::move(state.positions);
    std::vector<double> pool_fit = std::move(state.fitnesses);
    for (std::size_t k = 0; k < n; ++k) {
        pool_pos.push_back(std::move(next_pos[k]));
        pool_fit.push_back(next_fit[k]);
    }
    auto pool_order = rank_by_fitness(pool_fit);
    state.positions.clear();
    state.fitnesses.clear();
    for (std::size_t k = 0; k < n; ++k) {
        state.positions.push_back(std::move(pool_pos[pool_order[k]]));
        state.fitnesses.push_back(pool_fit[pool_order[k]]);
    }
}

} // namespace niafs::nia::detail
