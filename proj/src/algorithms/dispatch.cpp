#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "niafs/errors.hpp"
#include "step_common.hpp"

namespace niafs::nia {

namespace detail {

std::vector<std::size_t> rank_by_fitness(const std::vector<double>& fitnesses) {
    std::vector<std::size_t> idx(fitnesses.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fitnesses[a] < fitnesses[b]; });
    return idx;
}

} // namespace detail

const std::map<std::string, double>& algorithm_param_defaults(Algorithm a) {
    static const std::map<Algorithm, std::map<std::string, double>> defaults = {
        {Algorithm::PSO, {{"inertia", 0.7}, {"cognitive", 1.5}, {"social", 1.5}}},
        {Algorithm::ABC, {{"limit", 50.0}}},
        {Algorithm::Bat,
         {{"f_min", 0.0},
          {"f_max", 2.0},
          {"loudness", 0.95},
          {"pulse_rate", 0.5},
          {"loudness_decay", 0.9},
          {"pulse_growth", 0.9},
          {"local_scale", 0.05},
          {"local_scale_end", 1e-5}}},
        {Algorithm::Firefly,
         {{"beta0", 1.0}, {"gamma", 1.0}, {"alpha", 0.2}, {"alpha_decay", 0.97}}},
        {Algorithm::CatSwarm,
         {{"mixture_ratio", 0.3},
          {"smp", 5.0},
          {"srd", 0.2},
          {"srd_end", 0.005},
          {"cdc", 0.8},
          {"trace_c", 2.05},
          {"trace_vmax", 0.5},
          {"trace_vmax_end", 0.005}}},
        {Algorithm::BFO,
         {{"chemotaxis_steps", 20.0},
          {"swim_length", 4.0},
          {"reproduction_steps", 4.0},
          {"elimination_steps", 2.0},
          {"elimination_prob", 0.25},
          {"step_size", 0.1},
          {"step_size_end", 0.01}}},
        {Algorithm::CuckooSearch,
         {{"discovery_prob", 0.25}, {"levy_beta", 1.5}, {"step_scale", 0.01}}},
        {Algorithm::GravitationalSearch,
         {{"g0", 100.0}, {"g_decay", 20.0}, {"epsilon", 1e-9}}},
        {Algorithm::ForestOptimization,
         {{"local_seeds", 2.0},
          {"global_seed_dims", 1.0},
          {"lifetime", 6.0},
          {"area_limit", 0.0}, // 0 means population size
          {"transfer_rate", 0.1},
          {"seed_step", 0.1},
          {"seed_step_end", 0.01}}},
        {Algorithm::MonarchButterfly,
         {{"partition_ratio", 5.0 / 12.0},
          {"migration_period", 1.2},
          {"adjusting_rate", 5.0 / 12.0},
          {"max_step", 1.0}}},
        {Algorithm::MonkeyKingEvolution,
         {{"fluctuation", 0.7}, {"particle_rate", 0.5}, {"king_group", 3.0}}},
    };
    return defaults.at(a);
}

void validate_algorithm_params(Algorithm a, const std::map<std::string, double>& params) {
    static const std::set<std::string> probabilities = {
        "pulse_rate", "mixture_ratio", "cdc",        "elimination_prob", "discovery_prob",
        "transfer_rate", "partition_ratio", "adjusting_rate", "particle_rate", "loudness",
        "loudness_decay", "pulse_growth"};
    static const std::set<std::string> positive = {
        "limit",  "smp",   "chemotaxis_steps", "swim_length", "reproduction_steps",
        "elimination_steps", "levy_beta", "g0", "epsilon", "local_seeds", "lifetime",
        "migration_period", "king_group", "step_scale"};
    auto fail = [&](const std::string& key, const char* what) {
        throw ValidationError("OptimizerSpec.params: '" + key + "' " + what + " for " +
                              opt::algorithm_id(a));
    };
    for (const auto& [key, value] : params) {
        if (probabilities.count(key) && !(value >= 0.0 && value <= 1.0))
            fail(key, "must lie in [0, 1]");
        if (positive.count(key) && !(value > 0.0)) fail(key, "must be > 0");
    }
    if (a == Algorithm::Bat && params.count("f_min") && params.count("f_max") &&
        params.at("f_min") > params.at("f_max"))
        fail("f_min", "must be <= f_max");
    if (a == Algorithm::CuckooSearch && params.count("levy_beta")) {
        const double beta = params.at("levy_beta");
        if (!(beta > 1.0 && beta <= 2.0)) fail("levy_beta", "must lie in (1, 2]");
    }
}

AlgorithmState init_state(const OptimizerSpec& spec, Evaluator& eval, const SearchSpace& space,
                          RngStream& rng) {
    const auto resolved = spec.resolved_params();
    const detail::Params params{resolved};

    AlgorithmState state;
    state.positions = opt::initialize_population(space, spec.population_size, rng);
    state.fitnesses.assign(spec.population_size, std::numeric_limits<double>::infinity());
    state.best_fitness = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        double f;
        if (!detail::try_eval(eval, state, state.positions[i], f)) break;
        state.fitnesses[i] = f;
    }

    switch (spec.algorithm) {
        case Algorithm::PSO: detail::init_pso(state, params); break;
        case Algorithm::ABC: detail::init_abc(state, params); break;
        case Algorithm::Bat: detail::init_bat(state, params); break;
        case Algorithm::Firefly: detail::init_firefly(state, params); break;
        case Algorithm::CatSwarm: detail::init_cat_swarm(state, params); break;
        case Algorithm::BFO: detail::init_bfo(state, params); break;
        case Algorithm::CuckooSearch: detail::init_cuckoo(state, params); break;
        case Algorithm::GravitationalSearch: detail::init_gsa(state, params); break;
        case Algorithm::ForestOptimization: detail::init_forest(state, params); break;
        case Algorithm::MonarchButterfly: detail::init_monarch(state, params); break;
        case Algorithm::MonkeyKingEvolution: detail::init_monkey_king(state, params); break;
    }
    return state;
}

void step_state(const OptimizerSpec& spec, AlgorithmState& state, Evaluator& eval,
                const SearchSpace& space, RngStream& rng) {
    const auto resolved = spec.resolved_params();
    const detail::Params params{resolved};
    state.last_step_partial = false;

    switch (spec.algorithm) {
        case Algorithm::PSO: detail::step_pso(state, params, eval, space, rng); break;
        case Algorithm::ABC: detail::step_abc(state, params, eval, space, rng); break;
        case Algorithm::Bat: detail::step_bat(state, params, eval, space, rng); break;
        case Algorithm::Firefly: detail::step_firefly(state, params, eval, space, rng); break;
        case Algorithm::CatSwarm: detail::step_cat_swarm(state, params, eval, space, rng); break;
        case Algorithm::BFO: detail::step_bfo(state, params, eval, space, rng); break;
        case Algorithm::CuckooSearch: detail::step_cuckoo(state, params, eval, space, rng); break;
        case Algorithm::GravitationalSearch: detail::step_gsa(state, params, eval, space, rng); break;
        case Algorithm::ForestOptimization: detail::step_forest(state, params, eval, space, rng); break;
        case Algorithm::MonarchButterfly: detail::step_monarch(state, params, eval, space, rng); break;
        case Algorithm::MonkeyKingEvolution:
            detail::step_monkey_king(state, params, eval, space, rng);
            break;
    }
    ++state.generation;
}

AlgorithmState step_algorithm(Algorithm algorithm, const AlgorithmState& state,
                              const Objective& objective, const SearchSpace& space,
                              RngStream& rng) {
    if (state.positions.empty() || state.positions.size() != state.fitnesses.size())
        throw ValidationError("step_algorithm: inconsistent state");
    OptimizerSpec spec;
    spec.algorithm = algorithm;
    spec.population_size = std::max<std::size_t>(2, state.population_size());
    spec.max_evaluations = std::numeric_limits<std::size_t>::max();

    Evaluator eval(objective, space, spec.max_evaluations);
    eval.seed_best(state.best_position, state.best_fitness);
    AlgorithmState next = state;
    step_state(spec, next, eval, space, rng);
    return next;
}

} // namespace niafs::nia
