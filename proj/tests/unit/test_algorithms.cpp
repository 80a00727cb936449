#include <doctest.h>

#include <cmath>

#include "niafs/algorithms.hpp"
#include "niafs/errors.hpp"

using namespace niafs;
using namespace niafs::nia;
using niafs::opt::Algorithm;
using niafs::opt::OptimizerSpec;
using niafs::opt::SearchSpace;

namespace {

AlgorithmState fresh_state(Algorithm a, const opt::Objective& obj, const SearchSpace& space,
                           std::size_t pop, RngStream& rng) {
    OptimizerSpec spec;
    spec.algorithm = a;
    spec.population_size = pop;
    spec.max_evaluations = 1000000;
    opt::Evaluator eval(obj, space, spec.max_evaluations);
    return init_state(spec, eval, space, rng);
}

} // namespace

TEST_CASE("one step on a constant objective keeps the incumbent") {
    opt::Objective constant{"c", 3, [](const std::vector<double>&) { return 7.0; }};
    const auto space = SearchSpace::box(3, -1.0, 1.0);
    for (Algorithm a : opt::all_algorithms()) {
        RngStream rng(4);
        auto state = fresh_state(a, constant, space, 8, rng);
        CHECK(state.best_fitness == 7.0);
        const auto next = step_algorithm(a, state, constant, space, rng);
        CHECK(next.best_fitness == 7.0);
    }
}

TEST_CASE("elitism holds over 1000 random steps per algorithm") {
    auto [sphere, space] = opt::builtin_objective("sphere", 3);
    for (Algorithm a : opt::all_algorithms()) {
        RngStream rng(31 + static_cast<std::uint64_t>(a));
        auto state = fresh_state(a, sphere, space, 10, rng);
        double incumbent = state.best_fitness;
        for (int step = 0; step < 1000; ++step) {
            state = step_algorithm(a, state, sphere, space, rng);
            CHECK(state.best_fitness <= incumbent);
            incumbent = state.best_fitness;
            CHECK(state.positions.size() == state.fitnesses.size());
            for (const auto& p : state.positions)
                for (std::size_t d = 0; d < p.size(); ++d) {
                    CHECK(p[d] >= space.lower[d]);
                    CHECK(p[d] <= space.upper[d]);
                }
        }
        // Convergence proper is the acceptance battery's job (the unlimited
        // budget here keeps annealed step sizes at their coarse start); the
        // incumbent must still sit far below the ~80 random-init level.
        CHECK(state.best_fitness < 10.0);
    }
}

TEST_CASE("state trajectories are deterministic per seed") {
    auto [rastrigin, space] = opt::builtin_objective("rastrigin", 4);
    for (Algorithm a : opt::all_algorithms()) {
        RngStream rng1(77), rng2(77);
        auto s1 = fresh_state(a, rastrigin, space, 9, rng1);
        auto s2 = fresh_state(a, rastrigin, space, 9, rng2);
        for (int step = 0; step < 25; ++step) {
            s1 = step_algorithm(a, s1, rastrigin, space, rng1);
            s2 = step_algorithm(a, s2, rastrigin, space, rng2);
        }
        CHECK(s1.positions == s2.positions);
        CHECK(s1.fitnesses == s2.fitnesses);
        CHECK(s1.best_position == s2.best_position);
        CHECK(s1.best_fitness == s2.best_fitness);
    }
}

TEST_CASE("100 cuckoo steps collapse a 2-D sphere") {
    auto [sphere, space] = opt::builtin_objective("sphere", 2);
    RngStream rng(3);
    auto state = fresh_state(Algorithm::CuckooSearch, sphere, space, 20, rng);
    for (int step = 0; step < 100; ++step)
        state = step_algorithm(Algorithm::CuckooSearch, state, sphere, space, rng);
    CHECK(state.best_fitness <= 0.1);
}

TEST_CASE("pso step on sphere-2d keeps the incumbent monotone") {
    auto [sphere, space] = opt::builtin_objective("sphere", 2);
    RngStream rng(12);
    auto state = fresh_state(Algorithm::PSO, sphere, space, 15, rng);
    const double before = state.best_fitness;
    const auto after = step_algorithm(Algorithm::PSO, state, sphere, space, rng);
    CHECK(after.best_fitness <= before);
}

TEST_CASE("parameter range validation names the key") {
    opt::OptimizerSpec spec;
    spec.algorithm = Algorithm::CuckooSearch;
    spec.params["discovery_prob"] = 1.4;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
    spec.params.clear();
    spec.params["levy_beta"] = 0.9;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
    spec.params.clear();
    spec.params["levy_beta"] = 1.5;
    CHECK_NOTHROW(spec.validate());

    spec.algorithm = Algorithm::Bat;
    spec.params.clear();
    spec.params["f_min"] = 3.0; // default f_max is 2
    CHECK_THROWS_AS(spec.validate(), ValidationError);

    spec.algorithm = Algorithm::ABC;
    spec.params.clear();
    spec.params["limit"] = 0.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
}

TEST_CASE("param defaults match the documented table") {
    const auto& pso = algorithm_param_defaults(Algorithm::PSO);
    CHECK(pso.at("inertia") == 0.7);
    CHECK(pso.at("cognitive") == 1.5);
    CHECK(pso.at("social") == 1.5);
    CHECK(algorithm_param_defaults(Algorithm::ABC).at("limit") == 50.0);
    CHECK(algorithm_param_defaults(Algorithm::CuckooSearch).at("discovery_prob") == 0.25);
    CHECK(algorithm_param_defaults(Algorithm::CuckooSearch).at("levy_beta") == 1.5);
    CHECK(algorithm_param_defaults(Algorithm::GravitationalSearch).at("g0") == 100.0);
    CHECK(algorithm_param_defaults(Algorithm::MonarchButterfly).at("partition_ratio") ==
          doctest::Approx(5.0 / 12.0));
    CHECK(algorithm_param_defaults(Algorithm::MonkeyKingEvolution).at("fluctuation") == 0.7);
    CHECK(algorithm_param_defaults(Algorithm::Bat).at("f_max") == 2.0);
    CHECK(algorithm_param_defaults(Algorithm::Firefly).at("alpha_decay") == 0.97);
    CHECK(algorithm_param_defaults(Algorithm::BFO).at("chemotaxis_steps") == 20.0);
    CHECK(algorithm_param_defaults(Algorithm::CatSwarm).at("smp") == 5.0);
    CHECK(algorithm_param_defaults(Algorithm::ForestOptimization).at("lifetime") == 6.0);
}
