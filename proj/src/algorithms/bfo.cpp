#include <algorithm>
#include <cmath>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_bfo(AlgorithmState& state, const Params&) {
    BfoScratch s;
    s.health.assign(state.population_size(), 0.0);
    state.scratch = std::move(s);
}

// One step = one chemotaxis sweep (tumble + swim per bacterium); every
// chemotaxis_steps sweeps the colony reproduces, and every
// reproduction_steps reproductions it partially disperses. The nested
// Passino loops are flattened so the evaluation budget is the only clock.
void step_bfo(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
              RngStream& rng) {
    auto& s = std::get<BfoScratch>(state.scratch);
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;
    const auto chemotaxis_steps = static_cast<std::size_t>(p("chemotaxis_steps"));
    const auto swim_length = static_cast<std::size_t>(p("swim_length"));
    const auto reproduction_steps = static_cast<std::size_t>(p("reproduction_steps"));
    const double elimination_prob = p("elimination_prob");

    const double frac = eval.budget_fraction();
    const double step_scale = p("step_size") + (p("step_size_end") - p("step_size")) * frac;

    std::vector<double> direction(dim);
    for (std::size_t i = 0; i < n; ++i) {
        // Tumble: random unit direction, scaled per dimension.
        double norm2 = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            direction[d] = rng.uniform(-1.0, 1.0);
            norm2 += direction[d] * direction[d];
        }
        const double inv_norm = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 0.0;
        for (std::size_t d = 0; d < dim; ++d)
            direction[d] *= inv_norm * step_scale * space.range(d);

        auto move_once = [&](const std::vector<double>& from) {
            std::vector<double> to(dim);
            for (std::size_t d = 0; d < dim; ++d) to[d] = from[d] + direction[d];
            return opt::clamp_to_bounds(to, space);
        };

        auto candidate = move_once(state.positions[i]);
        double f;
        if (!try_eval(eval, state, candidate, f)) return;
        double previous = state.fitnesses[i];
        state.positions[i] = std::move(candidate);
        state.fitnesses[i] = f;
        s.health[i] += f;

        // Swim while the gradient keeps paying off.
        for (std::size_t m = 0; m < swim_length && f < previous; ++m) {
            auto next = move_once(state.positions[i]);
            double f2;
            if (!try_eval(eval, state, next, f2)) return;
            s.health[i] += f2;
            previous = f;
            if (f2 < f) {
                state.positions[i] = std::move(next);
                state.fitnesses[i] = f2;
                f = f2;
            } else {
                break;
            }
        }
    }

    ++s.chemotaxis_sweep;
    if (s.chemotaxis_sweep % chemotaxis_steps == 0) {
        // Reproduction: healthier half (lower cumulative fitness) duplicates
        // over the weaker half.
        auto order = rank_by_fitness(s.health);
        const std::size_t half = n / 2;
        for (std::size_t k = 0; k < half; ++k) {
            const std::size_t src = order[k];
            const std::size_t dst = order[n - 1 - k];
            state.positions[dst] = state.positions[src];
            state.fitnesses[dst] = state.fitnesses[src];
        }
        std::fill(s.health.begin(), s.health.end(), 0.0);
        ++s.reproduction_count;

        if (s.reproduction_count % reproduction_steps == 0) {
            // Elimination-dispersal.
            for (std::size_t i = 0; i < n; ++i) {
                if (rng.uniform() >= elimination_prob) continue;
                std::vector<double> fresh(dim);
                for (std::size_t d = 0; d < dim; ++d)
                    fresh[d] = rng.uniform(space.lower[d], space.upper[d]);
                double f;
                if (!try_eval(eval, state, fresh, f)) return;
                state.positions[i] = std::move(fresh);
                state.fitnesses[i] = f;
            }
        }
    }
}

} // namespace niafs::nia::detail
