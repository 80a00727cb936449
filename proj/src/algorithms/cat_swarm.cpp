#include <algorithm>
#include <cmath>
#include <numeric>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_cat_swarm(AlgorithmState& state, const Params&) {
    CatScratch s;
    const std::size_t dim = state.positions.empty() ? 0 : state.positions[0].size();
    s.velocities.assign(state.population_size(), std::vector<double>(dim, 0.0));
    state.scratch = std::move(s);
}

void step_cat_swarm(AlgorithmState& state, const Params& p, Evaluator& eval,
                    const SearchSpace& space, RngStream& rng) {
    auto& s = std::get<CatScratch>(state.scratch);
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;
    const double mixture_ratio = p("mixture_ratio");
    const auto smp = static_cast<std::size_t>(p("smp"));
    const double cdc = p("cdc");
    const double trace_c = p("trace_c");

    // Seeking mutation range and the tracing velocity clamp both shrink
    // over the budget; the clamp is what stops the undamped velocity pull
    // from orbiting the incumbent forever.
    const double frac = eval.budget_fraction();
    const double srd_now = p("srd") * std::pow(p("srd_end") / p("srd"), frac);
    const double vmax_frac = p("trace_vmax") * std::pow(p("trace_vmax_end") / p("trace_vmax"), frac);
    const std::size_t mutate_dims = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                                 std::llround(cdc * static_cast<double>(dim))));

    std::vector<std::size_t> dim_order(dim);
    for (std::size_t i = 0; i < n; ++i) {
        const bool seeking = rng.uniform() < mixture_ratio;
        if (seeking) {
            // Seeking mode: clone, perturb a subset of dimensions, keep the best.
            std::vector<double> best_cand = state.positions[i];
            double best_f = state.fitnesses[i];
            for (std::size_t c = 0; c < smp; ++c) {
                std::iota(dim_order.begin(), dim_order.end(), std::size_t{0});
                rng.shuffle(dim_order);
                auto clone = state.positions[i];
                for (std::size_t k = 0; k < mutate_dims; ++k) {
                    const std::size_t d = dim_order[k];
                    clone[d] += srd_now * space.range(d) * rng.uniform(-1.0, 1.0);
                }
                clone = opt::clamp_to_bounds(clone, space);
                double f;
                if (!try_eval(eval, state, clone, f)) return;
                if (f < best_f) {
                    best_f = f;
                    best_cand = std::move(clone);
                }
            }
            state.positions[i] = std::move(best_cand);
            state.fitnesses[i] = best_f;
        } else {
            // Tracing mode: velocity pull toward the incumbent.
            auto& v = s.velocities[i];
            std::vector<double> candidate(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                v[d] += rng.uniform() * trace_c * (state.best_position[d] - state.positions[i][d]);
                const double vmax = vmax_frac * space.range(d);
                if (v[d] > vmax) v[d] = vmax;
                else if (v[d] < -vmax) v[d] = -vmax;
                candidate[d] = state.positions[i][d] + v[d];
            }
            candidate = opt::clamp_to_bounds(candidate, space);
            double f;
            if (!try_eval(eval, state, candidate, f)) return;
            state.positions[i] = std::move(candidate);
            state.fitnesses[i] = f;
        }
    }
}

} // namespace niafs::nia::detail
