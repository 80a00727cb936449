#include <cmath>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_gsa(AlgorithmState& state, const Params&) {
    GsaScratch s;
    const std::size_t dim = state.positions.empty() ? 0 : state.positions[0].size();
    s.velocities.assign(state.population_size(), std::vector<double>(dim, 0.0));
    state.scratch = std::move(s);
}

void step_gsa(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
              RngStream& rng) {
    auto& s = std::get<GsaScratch>(state.scratch);
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;

    const double frac = eval.budget_fraction();
    const double G = p("g0") * std::exp(-p("g_decay") * frac);

    // K-best neighborhood shrinks linearly from the whole swarm to one.
    const auto shrink = static_cast<std::size_t>(std::llround(frac * static_cast<double>(n - 1)));
    const std::size_t kbest = std::max<std::size_t>(1, n - std::min(shrink, n - 1));
    auto order = rank_by_fitness(state.fitnesses);
    order.resize(std::min(kbest, order.size()));

    std::vector<std::vector<double>> weights(n, std::vector<double>(order.size()));
    for (auto& row : weights)
        for (double& w : row) w = rng.uniform();

    const auto acc = gsa_forces(state.positions, state.fitnesses, G, p("epsilon"), weights, order);

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> candidate(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            s.velocities[i][d] = rng.uniform() * s.velocities[i][d] + acc[i][d];
            candidate[d] = state.positions[i][d] + s.velocities[i][d];
        }
        candidate = opt::clamp_to_bounds(candidate, space);
        double f;
        if (!try_eval(eval, state, candidate, f)) return;
        state.positions[i] = std::move(candidate);
        state.fitnesses[i] = f;
    }
}

} // namespace niafs::nia::detail
