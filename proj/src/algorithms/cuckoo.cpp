#include <numeric>

#include "step_common.hpp"

namespace niafs::nia::detail {

void init_cuckoo(AlgorithmState& state, const Params&) {
    state.scratch = CuckooScratch{};
}

void step_cuckoo(AlgorithmState& state, const Params& p, Evaluator& eval, const SearchSpace& space,
                 RngStream& rng) {
    const std::size_t n = state.population_size();
    const std::size_t dim = space.dimension;
    const double discovery_prob = p("discovery_prob");
    const double levy_beta = p("levy_beta");
    const double step_scale = p("step_scale");

    // Levy-flight phase: step sized by the distance to the incumbent, so
    // nests near the best take fine steps and distant nests take coarse ones.
    for (std::size_t i = 0; i < n; ++i) {
        const auto levy = levy_flight_step(levy_beta, 1.0, rng, dim);
        std::vector<double> candidate(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const double stepsize =
                step_scale * levy[d] * (state.positions[i][d] - state.best_position[d]);
            candidate[d] = state.positions[i][d] + stepsize * rng.normal();
        }
        candidate = opt::clamp_to_bounds(candidate, space);
        double f;
        if (!try_eval(eval, state, candidate, f)) return;
        if (f < state.fitnesses[i]) {
            state.positions[i] = std::move(candidate);
            state.fitnesses[i] = f;
        }
    }

    // Discovery phase: a fraction of eggs is found and replaced by a blend
    // step between two random nests.
    const auto snapshot = state.positions;
    std::vector<std::size_t> perm1(n), perm2(n);
    std::iota(perm1.begin(), perm1.end(), std::size_t{0});
    std::iota(perm2.begin(), perm2.end(), std::size_t{0});
    rng.shuffle(perm1);
    rng.shuffle(perm2);
    const double blend = rng.uniform();

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> candidate = state.positions[i];
        bool changed = false;
        for (std::size_t d = 0; d < dim; ++d) {
            if (rng.uniform() < discovery_prob) {
                candidate[d] += blend * (snapshot[perm1[i]][d] - snapshot[perm2[i]][d]);
                changed = true;
            }
        }
        if (!changed) continue;
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
