#include <algorithm>
#include <cmath>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_forest(AlgorithmState& state, const Params& p) {
    ForestScratch s;
    s.ages.assign(state.population_size(), 0);
    s.area_limit = static_cast<std::size_t>(p("area_limit"));
    if (s.area_limit == 0) s.area_limit = state.population_size();
    state.scratch = std::move(s);
}

void step_forest(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
                 RngStream& rng) {
    auto& s = std::get<ForestScratch>(state.scratch);
    const std::size_t dim = space.dimension;
    const auto local_seeds = static_cast<std::size_t>(p("local_seeds"));
    const auto global_seed_dims = static_cast<std::size_t>(p("global_seed_dims"));
    const auto lifetime = static_cast<std::size_t>(p("lifetime"));
    const std::size_t area_limit = s.area_limit;
    const double transfer_rate = p("transfer_rate");

    const double frac = eval.budget_fraction();
    const double seed_step = p("seed_step") + (p("seed_step_end") - p("seed_step")) * frac;

    // Local seeding: every young tree drops children nearby (one dimension
    // nudged per child).
    std::vector<std::vector<double>> child_positions;
    std::vector<double> child_fitnesses;
    const std::size_t tree_count = state.positions.size();
    for (std::size_t i = 0; i < tree_count; ++i) {
        if (s.ages[i] != 0) continue;
        for (std::size_t c = 0; c < local_seeds; ++c) {
            auto child = state.positions[i];
            const std::size_t d = rng.index(dim);
            child[d] += rng.uniform(-1.0, 1.0) * seed_step * space.range(d);
            child = opt::clamp_to_bounds(child, space);
            double f;
            if (!try_eval(eval, state, child, f)) return;
            child_positions.push_back(std::move(child));
            child_fitnesses.push_back(f);
        }
    }

    for (auto& age : s.ages) ++age;
    for (std::size_t c = 0; c < child_positions.size(); ++c) {
        state.positions.push_back(std::move(child_positions[c]));
        state.fitnesses.push_back(child_fitnesses[c]);
        s.ages.push_back(0);
    }

    // Population control: over-aged trees fall out, then the worst extras
    // beyond the area limit; both feed the candidate pool.
    std::vector<std::vector<double>> candidates;
    {
        std::vector<std::vector<double>> keep_pos;
        std::vector<double> keep_fit;
        std::vector<std::size_t> keep_age;
        for (std::size_t i = 0; i < state.positions.size(); ++i) {
            if (s.ages[i] > lifetime) {
                candidates.push_back(std::move(state.positions[i]));
            } else {
                keep_pos.push_back(std::move(state.positions[i]));
                keep_fit.push_back(state.fitnesses[i]);
                keep_age.push_back(s.ages[i]);
            }
        }
        if (keep_pos.size() > area_limit) {
            auto order = rank_by_fitness(keep_fit);
            std::vector<std::vector<double>> trimmed_pos;
            std::vector<double> trimmed_fit;
            std::vector<std::size_t> trimmed_age;
            for (std::size_t k = 0; k < keep_pos.size(); ++k) {
                const std::size_t idx = order[k];
                if (k < area_limit) {
                    trimmed_pos.push_back(std::move(keep_pos[idx]));
                    trimmed_fit.push_back(keep_fit[idx]);
                    trimmed_age.push_back(keep_age[idx]);
                } else {
                    candidates.push_back(std::move(keep_pos[idx]));
                }
            }
            keep_pos = std::move(trimmed_pos);
            keep_fit = std::move(trimmed_fit);
            keep_age = std::move(trimmed_age);
        }
        state.positions = std::move(keep_pos);
        state.fitnesses = std::move(keep_fit);
        s.ages = std::move(keep_age);
    }

    // Global seeding: a share of the candidate pool re-enters with some
    // dimensions re-drawn across the whole space.
    const auto reseeds = static_cast<std::size_t>(
        std::llround(transfer_rate * static_cast<double>(candidates.size())));
    for (std::size_t k = 0; k < reseeds; ++k) {
        auto tree = candidates[rng.index(candidates.size())];
        for (std::size_t g = 0; g < global_seed_dims; ++g) {
            const std::size_t d = rng.index(dim);
            tree[d] = rng.uniform(space.lower[d], space.upper[d]);
        }
        double f;
        if (!try_eval(eval, state, tree, f)) return;
        state.positions.push_back(std::move(tree));
        state.fitnesses.push_back(f);
        s.ages.push_back(0);
    }

    // The best tree stays young, so the forest never dies out entirely.
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.fitnesses.size(); ++i)
        if (state.fitnesses[i] < state.fitnesses[best]) best = i;
    s.ages[best] = 0;
}

} // namespace niafs::nia::detail
