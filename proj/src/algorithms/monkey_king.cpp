#include <algorithm>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_monkey_king(AlgorithmState& state, const Params&) {
    state.scratch = MkeScratch{};
}

// V1 scheme: each particle mixes, dimension by dimension at particle_rate,
// a fluctuation move around a king-group member (one of the current top C)
// with its own coordinates, and keeps the better of old and new.
void step_monkey_king(AlgorithmState& state, const Params& p, Evaluator& eval,
                      const SearchSpace& space, RngStream& rng) {
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;
    const double fc = p("fluctuation");
    const double particle_rate = p("particle_rate");
    const auto king_group = std::min<std::size_t>(
        std::max<std::size_t>(1, static_cast<std::size_t>(p("king_group"))), n);

    auto order = rank_by_fitness(state.fitnesses);

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r1 = rng.index(n);
        std::size_t r2 = rng.index(n - 1);
        if (r2 >= r1) ++r2;
        const auto& king = state.positions[order[rng.index(king_group)]];

        std::vector<double> candidate = state.positions[i];
        const std::size_t forced = rng.index(dim); // at least one mixed dim
        for (std::size_t d = 0; d < dim; ++d) {
            if (d == forced || rng.uniform() < particle_rate)
                candidate[d] = king[d] + fc * (state.positions[r1][d] - state.positions[r2][d]);
        }
        candidate = opt::clamp_to_bounds(candidate, space);

        double f;
        if (!try_eval(eval, state, candidate, f)) return;
        if (f < state.fitnesses[i]) {
            state.positions[i] = std::move(candidate);
            state.fitnesses[i] = f;
        }
    }
}

} // namespace niafs::nia::detail
