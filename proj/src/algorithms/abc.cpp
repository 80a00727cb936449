#include <cmath>

#include "step_common.hpp"

namespace niafs::nia::detail {

namespace {

// Karaboga's fitness transform for roulette selection (minimization in,
// higher-is-better weight out).
double abc_weight(double f) {
    return f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::fabs(f);
}

// Candidate move on one dimension against a random partner; greedy accept.
// Returns false when the budget dies.
bool neighbor_move(std::size_t i, AlgorithmState& state, AbcScratch& s, Evaluator& eval,
                   const SearchSpace& space, RngStream& rng) {
    std::size_t partner = rng.index(state.population_size() - 1);
    if (partner >= i) ++partner;
    const std::size_t dim_index = rng.index(space.dimension);
    const double phi = rng.uniform(-1.0, 1.0);

    auto candidate = abc_neighbor_search(state.positions[i], state.positions[partner], dim_index, phi);
    candidate = opt::clamp_to_bounds(candidate, space);
    double f;
    if (!try_eval(eval, state, candidate, f)) return false;
    if (f < state.fitnesses[i]) {
        state.positions[i] = std::move(candidate);
        state.fitnesses[i] = f;
        s.trials[i] = 0;
    } else {
        ++s.trials[i];
    }
    return true;
}

} // namespace

void init_abc(AlgorithmState& state, const Params&) {
    AbcScratch s;
    s.trials.assign(state.population_size(), 0);
    state.scratch = std::move(s);
}

void step_abc(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
              RngStream& rng) {
    auto& s = std::get<AbcScratch>(state.scratch);
    const std::size_t n = state.population_size();
    const auto limit = static_cast<std::size_t>(p("limit"));

    // Employed phase: one neighbor move per food source.
    for (std::size_t i = 0; i < n; ++i)
        if (!neighbor_move(i, state, s, eval, space, rng)) return;

    // Onlooker phase: fitness-proportional roulette over the sources.
    std::vector<double> weights(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = abc_weight(state.fitnesses[i]);
        total += weights[i];
    }
    for (std::size_t t = 0; t < n; ++t) {
        double pick = rng.uniform() * total;
        std::size_t chosen = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            pick -= weights[i];
            if (pick <= 0.0) {
                chosen = i;
                break;
            }
        }
        if (!neighbor_move(chosen, state, s, eval, space, rng)) return;
    }

    // Scout phase: the most exhausted source past the trial limit restarts.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (s.trials[i] > s.trials[worst]) worst = i;
    if (s.trials[worst] > limit) {
        std::vector<double> fresh(space.dimension);
        for (std::size_t d = 0; d < space.dimension; ++d)
            fresh[d] = rng.uniform(space.lower[d], space.upper[d]);
        double f;
        if (!try_eval(eval, state, fresh, f)) return;
        state.positions[worst] = std::move(fresh);
        state.fitnesses[worst] = f;
        s.trials[worst] = 0;
    }
}

} // namespace niafs::nia::detail
