#include <doctest.h>

#include <cmath>

#include "niafs/errors.hpp"
#include "niafs/optimize.hpp"

using namespace niafs;
using namespace niafs::opt;

TEST_CASE("clamp_to_bounds projects componentwise") {
    const auto space = SearchSpace::box(1, 0.0, 1.0);
    CHECK(clamp_to_bounds({0.5}, space) == std::vector<double>{0.5});

    const auto unit2 = SearchSpace::box(2, 0.0, 1.0);
    CHECK(clamp_to_bounds({1.7, -0.3}, unit2) == std::vector<double>{1.0, 0.0});

    const auto wide = SearchSpace::box(2, -5.12, 5.12);
    CHECK(clamp_to_bounds({-6.0, 6.0}, wide) == std::vector<double>{-5.12, 5.12});

    CHECK_THROWS_AS(clamp_to_bounds({1.0}, unit2), DimensionError);
}

TEST_CASE("builtin objectives hit their analytic minima") {
    auto [sphere, s1] = builtin_objective("sphere", 4);
    CHECK(sphere.evaluate({0, 0, 0, 0}) == doctest::Approx(0.0));
    CHECK(s1.lower[0] == -5.12);

    auto [rastrigin, s2] = builtin_objective("rastrigin", 3);
    CHECK(rastrigin.evaluate({0, 0, 0}) == doctest::Approx(0.0));

    auto [rosen, s3] = builtin_objective("rosenbrock", 5);
    CHECK(rosen.evaluate({1, 1, 1, 1, 1}) == doctest::Approx(0.0));
    CHECK(s3.upper[0] == 2.048);

    auto [ackley, s4] = builtin_objective("ackley", 2);
    CHECK(ackley.evaluate({0, 0}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(s4.upper[0] == 32.768);

    CHECK_THROWS_AS(builtin_objective("nope", 2), ValidationError);
    CHECK_THROWS_AS(builtin_objective("sphere", 0), ValidationError);
}

TEST_CASE("initialize_population is deterministic and in bounds") {
    const auto space = SearchSpace::box(1, 0.0, 1.0);
    RngStream a(17), b(17);
    const auto p1 = initialize_population(space, 3, a);
    const auto p2 = initialize_population(space, 3, b);
    CHECK(p1 == p2);
    CHECK(p1.size() == 3);

    const auto wide = SearchSpace::box(4, -3.0, 7.0);
    RngStream c(8);
    for (const auto& v : initialize_population(wide, 20, c))
        for (double x : v) {
            CHECK(x >= -3.0);
            CHECK(x <= 7.0);
        }

    RngStream d(1);
    CHECK_THROWS_AS(initialize_population(space, 0, d), ValidationError);
}

TEST_CASE("spec validation names the offending field") {
    OptimizerSpec spec;
    spec.population_size = 1;
    CHECK_THROWS_WITH_AS(spec.validate(),
                         "OptimizerSpec.population_size: must be >= 2", ValidationError);

    spec.population_size = 30;
    spec.max_evaluations = 10;
    CHECK_THROWS_WITH_AS(spec.validate(),
                         "OptimizerSpec.max_evaluations: must be >= population_size",
                         ValidationError);

    spec.max_evaluations = 1000;
    spec.params["definitely_not_a_knob"] = 1.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
}

TEST_CASE("algorithm names parse both ways") {
    CHECK(parse_algorithm("PSO") == Algorithm::PSO);
    CHECK(parse_algorithm("ParticleSwarmAlgorithm") == Algorithm::PSO);
    CHECK(parse_algorithm("MonkeyKingEvolutionV1") == Algorithm::MonkeyKingEvolution);
    CHECK(all_algorithms().size() == kAlgorithmCount);
    CHECK_THROWS_AS(parse_algorithm("SimulatedAnnealing"), ValidationError);
}

TEST_CASE("constant objective returns the constant for every algorithm") {
    Objective constant{"constant", 3, [](const std::vector<double>&) { return 3.0; }};
    const auto space = SearchSpace::box(3, 0.0, 1.0);
    for (Algorithm a : all_algorithms()) {
        OptimizerSpec spec;
        spec.algorithm = a;
        spec.population_size = 10;
        spec.max_evaluations = 300;
        const auto result = run_optimizer(constant, space, spec, RngStream(5));
        CHECK(result.best_fitness == 3.0);
        CHECK(result.evaluations_used <= 300);
    }
}

TEST_CASE("1-D quadratic lands near the analytic minimum") {
    Objective quad{"quad", 1,
                   [](const std::vector<double>& x) { return (x[0] - 2.0) * (x[0] - 2.0); }};
    SearchSpace space;
    space.dimension = 1;
    space.lower = {0.0};
    space.upper = {4.0};
    OptimizerSpec spec;
    spec.algorithm = Algorithm::PSO;
    spec.population_size = 30;
    spec.max_evaluations = 5000;
    const auto result = run_optimizer(quad, space, spec, RngStream(42));
    CHECK(std::fabs(result.best_position[0] - 2.0) <= 0.05);
}

TEST_CASE("5-D sphere with cuckoo search reaches 1e-2") {
    auto [sphere, space] = builtin_objective("sphere", 5);
    OptimizerSpec spec;
    spec.algorithm = Algorithm::CuckooSearch;
    spec.population_size = 30;
    spec.max_evaluations = 15000;
    const auto result = run_optimizer(sphere, space, spec, RngStream(7));
    CHECK(result.best_fitness <= 1e-2);
}

TEST_CASE("budget respected and history monotone for every algorithm") {
    auto [sphere, space] = builtin_objective("sphere", 4);
    for (Algorithm a : all_algorithms()) {
        OptimizerSpec spec;
        spec.algorithm = a;
        spec.population_size = 12;
        spec.max_evaluations = 777; // deliberately not a multiple of anything
        const auto result = run_optimizer(sphere, space, spec, RngStream(3));
        CHECK(result.evaluations_used <= 777);
        for (std::size_t i = 1; i < result.history.size(); ++i) {
            CHECK(result.history[i].second <= result.history[i - 1].second);
            CHECK(result.history[i].first >= result.history[i - 1].first);
        }
        for (std::size_t d = 0; d < space.dimension; ++d) {
            CHECK(result.best_position[d] >= space.lower[d]);
            CHECK(result.best_position[d] <= space.upper[d]);
        }
        CHECK(result.best_fitness ==
              doctest::Approx(sphere.evaluate(result.best_position)).epsilon(1e-12));
    }
}

TEST_CASE("objective failures propagate with evaluation context") {
    Objective angry{"angry_objective", 2, [](const std::vector<double>&) -> double {
                        throw std::domain_error("boom");
                    }};
    const auto space = SearchSpace::box(2, 0.0, 1.0);
    OptimizerSpec spec;
    spec.population_size = 4;
    spec.max_evaluations = 40;
    try {
        run_optimizer(angry, space, spec, RngStream(1));
        FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
        const std::string what = e.what();
        CHECK(what.find("angry_objective") != std::string::npos);
        CHECK(what.find("boom") != std::string::npos);
        CHECK(what.find("evaluation 1") != std::string::npos);
    }
}

TEST_CASE("identical inputs give bit-identical results") {
    auto [rastrigin, space] = builtin_objective("rastrigin", 3);
    for (Algorithm a : all_algorithms()) {
        OptimizerSpec spec;
        spec.algorithm = a;
        spec.population_size = 10;
        spec.max_evaluations = 500;
        const auto r1 = run_optimizer(rastrigin, space, spec, RngStream(21));
        const auto r2 = run_optimizer(rastrigin, space, spec, RngStream(21));
        CHECK(r1.best_fitness == r2.best_fitness);
        CHECK(r1.best_position == r2.best_position);
        CHECK(r1.evaluations_used == r2.evaluations_used);
        CHECK(r1.history == r2.history);
    }
}
