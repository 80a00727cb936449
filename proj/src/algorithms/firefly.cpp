#include <algorithm>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_firefly(AlgorithmState& state, const Params& p) {
    FireflyScratch s;
    s.alpha_now = p("alpha");
    state.scratch = std::move(s);
}

void step_firefly(AlgorithmState& state, const Params& p, Evaluator& eval,
                  const SearchSpace& space, RngStream& rng) {
    auto& s = std::get<FireflyScratch>(state.scratch);
    const double beta0 = p("beta0");
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;

    // gamma is normalized by the squared mean range so the attraction term
    // stays usable on arbitrarily scaled boxes; noise is scaled by the
    // swarm's own per-dimension spread so it contracts with the swarm.
    const double L = space.mean_range();
    const double gamma_eff = p("gamma") / (L * L);
    std::vector<double> spread(dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d) {
        double lo = state.positions[0][d], hi = lo;
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, state.positions[i][d]);
            hi = std::max(hi, state.positions[i][d]);
        }
        spread[d] = hi - lo;
    }

    std::vector<double> noise(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Move toward any firefly at least as bright; <= keeps the
            // swarm exploring on fitness plateaus.
            if (j == i || state.fitnesses[j] > state.fitnesses[i]) continue;
            for (std::size_t d = 0; d < dim; ++d)
                noise[d] = (rng.uniform() - 0.5) * spread[d];
            auto moved = firefly_move(state.positions[i], state.positions[j], beta0, gamma_eff,
                                      s.alpha_now, noise);
            moved = opt::clamp_to_bounds(moved, space);
            double f;
            if (!try_eval(eval, state, moved, f)) return;
            state.positions[i] = std::move(moved);
            state.fitnesses[i] = f;
        }
    }
    s.alpha_now *= p("alpha_decay");
}

} // namespace niafs::nia::detail
