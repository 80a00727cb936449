#include <cmath>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_bat(AlgorithmState& state, const Params& p) {
    BatScratch s;
    const std::size_t dim = state.positions.empty() ? 0 : state.positions[0].size();
    s.velocities.assign(state.population_size(), std::vector<double>(dim, 0.0));
    s.loudness.assign(state.population_size(), p("loudness"));
    s.pulse_rate_now = 0.0;
    state.scratch = std::move(s);
}

void step_bat(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
              RngStream& rng) {
    auto& s = std::get<BatScratch>(state.scratch);
    const double f_min = p("f_min"), f_max = p("f_max");
    const double loudness_decay = p("loudness_decay");
    const double pulse_growth = p("pulse_growth");
    // Local-walk amplitude anneals geometrically over the budget so late
    // walks polish the incumbent instead of re-exploring it.
    const double scale0 = p("local_scale");
    const double scale1 = p("local_scale_end");
    const double walk_amplitude = space.mean_range() * scale0 *
                                  std::pow(scale1 / scale0, eval.budget_fraction());

    // Emission rate rises toward its cap as the search matures.
    const auto t = static_cast<double>(state.generation + 1);
    s.pulse_rate_now = p("pulse_rate") * (1.0 - std::exp(-pulse_growth * t));

    for (std::size_t i = 0; i < state.population_size(); ++i) {
        const double rand_f = rng.uniform();
        BatUpdate u = bat_update(state.positions[i], s.velocities[i], state.best_position, f_min,
                                 f_max, rand_f, s.loudness[i] * walk_amplitude, s.pulse_rate_now,
                                 rng);
        s.velocities[i] = std::move(u.velocity);
        auto candidate = opt::clamp_to_bounds(u.position, space);

        double f;
        if (!try_eval(eval, state, candidate, f)) return;
        // Accept quieter and better solutions only.
        if (f <= state.fitnesses[i] && rng.uniform() < s.loudness[i]) {
            state.positions[i] = std::move(candidate);
            state.fitnesses[i] = f;
            s.loudness[i] *= loudness_decay;
        }
    }
}

} // namespace niafs::nia::detail
