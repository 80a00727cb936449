#include "step_common.hpp"

namespace niafs::nia::detail {

void init_pso(AlgorithmState& state, const Params&) {
    PsoScratch s;
    const std::size_t dim = state.positions.empty() ? 0 : state.positions[0].size();
    s.velocities.assign(state.population_size(), std::vector<double>(dim, 0.0));
    s.personal_best = state.positions;
    s.personal_best_fitness = state.fitnesses;
    state.scratch = std::move(s);
}

void step_pso(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
              RngStream& rng) {
    auto& s = std::get<PsoScratch>(state.scratch);
    const double w = p("inertia"), c1 = p("cognitive"), c2 = p("social");
    const std::size_t dim = space.dimension;

    std::vector<double> r1(dim), r2(dim);
    for (std::size_t i = 0; i < state.population_size(); ++i) {
        for (std::size_t d = 0; d < dim; ++d) r1[d] = rng.uniform();
        for (std::size_t d = 0; d < dim; ++d) r2[d] = rng.uniform();
        s.velocities[i] = pso_velocity_update(s.velocities[i], state.positions[i],
                                              s.personal_best[i], state.best_position, w, c1, c2,
                                              r1, r2);
        std::vector<double> candidate(dim);
        for (std::size_t d = 0; d < dim; ++d)
            candidate[d] = state.positions[i][d] + s.velocities[i][d];
        candidate = opt::clamp_to_bounds(candidate, space);

        double f;
        if (!try_eval(eval, state, candidate, f)) return;
        state.positions[i] = std::move(candidate);
        state.fitnesses[i] = f;
        if (f < s.personal_best_fitness[i]) {
            s.personal_best_fitness[i] = f;
            s.personal_best[i] = state.positions[i];
        }
    }
}

} // namespace niafs::nia::detail
