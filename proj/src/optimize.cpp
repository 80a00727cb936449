#include "niafs/optimize.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

#include "niafs/algorithms.hpp"
#include "niafs/errors.hpp"

namespace niafs::opt {

SearchSpace SearchSpace::box(std::size_t dimension, double lo, double hi) {
    SearchSpace s;
    s.dimension = dimension;
    s.lower.assign(dimension, lo);
    s.upper.assign(dimension, hi);
    s.validate();
    return s;
}

void SearchSpace::validate() const {
    if (dimension == 0) throw ValidationError("SearchSpace: dimension must be positive");
    if (lower.size() != dimension || upper.size() != dimension)
        throw ValidationError("SearchSpace: bound vectors must have length == dimension");
    for (std::size_t i = 0; i < dimension; ++i) {
        if (!(lower[i] < upper[i]))
            throw ValidationError("SearchSpace: lower[" + std::to_string(i) +
                                  "] must be < upper[" + std::to_string(i) + "]");
    }
}

double SearchSpace::mean_range() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dimension; ++i) s += range(i);
    return s / static_cast<double>(dimension);
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> order = {
        Algorithm::PSO,          Algorithm::ABC,
        Algorithm::Bat,          Algorithm::CatSwarm,
        Algorithm::BFO,          Algorithm::CuckooSearch,
        Algorithm::Firefly,      Algorithm::ForestOptimization,
        Algorithm::MonarchButterfly, Algorithm::MonkeyKingEvolution,
        Algorithm::GravitationalSearch,
    };
    return order;
}

std::string algorithm_id(Algorithm a) {
    switch (a) {
        case Algorithm::PSO: return "PSO";
        case Algorithm::ABC: return "ABC";
        case Algorithm::Bat: return "Bat";
        case Algorithm::Firefly: return "Firefly";
        case Algorithm::CatSwarm: return "CatSwarm";
        case Algorithm::BFO: return "BFO";
        case Algorithm::CuckooSearch: return "CuckooSearch";
        case Algorithm::GravitationalSearch: return "GravitationalSearch";
        case Algorithm::ForestOptimization: return "ForestOptimization";
        case Algorithm::MonarchButterfly: return "MonarchButterfly";
        case Algorithm::MonkeyKingEvolution: return "MonkeyKingEvolution";
    }
    throw ValidationError("algorithm_id: unknown algorithm");
}

std::string algorithm_display_name(Algorithm a) {
    switch (a) {
        case Algorithm::PSO: return "ParticleSwarmAlgorithm";
        case Algorithm::ABC: return "ArtificialBeeColonyAlgorithm";
        case Algorithm::Bat: return "BatAlgorithm";
        case Algorithm::Firefly: return "FireflyAlgorithm";
        case Algorithm::CatSwarm: return "CatSwarmOptimization";
        case Algorithm::BFO: return "BacterialForagingOptimization";
        case Algorithm::CuckooSearch: return "CuckooSearch";
        case Algorithm::GravitationalSearch: return "GravitationalSearch";
        case Algorithm::ForestOptimization: return "ForestOptimizationAlgorithm";
        case Algorithm::MonarchButterfly: return "MonarchButterflyOptimization";
        case Algorithm::MonkeyKingEvolution: return "MonkeyKingEvolutionV1";
    }
    throw ValidationError("algorithm_display_name: unknown algorithm");
}

Algorithm parse_algorithm(const std::string& name) {
    for (Algorithm a : all_algorithms()) {
        if (name == algorithm_id(a) || name == algorithm_display_name(a)) return a;
    }
    throw ValidationError("unknown algorithm name: '" + name + "'");
}

void OptimizerSpec::validate() const {
    if (population_size < 2)
        throw ValidationError("OptimizerSpec.population_size: must be >= 2");
    if (max_evaluations < population_size)
        throw ValidationError("OptimizerSpec.max_evaluations: must be >= population_size");
    const auto& schema = nia::algorithm_param_defaults(algorithm);
    for (const auto& [key, value] : params) {
        auto it = schema.find(key);
        if (it == schema.end())
            throw ValidationError("OptimizerSpec.params: unknown key '" + key + "' for " +
                                  algorithm_id(algorithm));
        if (!std::isfinite(value))
            throw ValidationError("OptimizerSpec.params: '" + key + "' must be finite");
    }
    std::map<std::string, double> resolved = schema;
    for (const auto& [key, value] : params) resolved[key] = value;
    nia::validate_algorithm_params(algorithm, resolved);
}

std::map<std::string, double> OptimizerSpec::resolved_params() const {
    validate();
    std::map<std::string, double> resolved = nia::algorithm_param_defaults(algorithm);
    for (const auto& [key, value] : params) resolved[key] = value;
    return resolved;
}

std::vector<double> clamp_to_bounds(const std::vector<double>& position, const SearchSpace& space) {
    if (position.size() != space.dimension)
        throw DimensionError("clamp_to_bounds: position length " +
                             std::to_string(position.size()) + " != dimension " +
                             std::to_string(space.dimension));
    std::vector<double> out = position;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < space.lower[i]) out[i] = space.lower[i];
        else if (out[i] > space.upper[i]) out[i] = space.upper[i];
    }
    return out;
}

std::vector<std::vector<double>> initialize_population(const SearchSpace& space, std::size_t n,
                                                       RngStream& rng) {
    space.validate();
    if (n < 1) throw ValidationError("initialize_population: n must be >= 1");
    std::vector<std::vector<double>> pop(n, std::vector<double>(space.dimension));
    for (auto& p : pop)
        for (std::size_t d = 0; d < space.dimension; ++d)
            p[d] = rng.uniform(space.lower[d], space.upper[d]);
    return pop;
}

std::pair<Objective, SearchSpace> builtin_objective(const std::string& name,
                                                    std::size_t dimension) {
    if (dimension < 1) throw ValidationError("builtin_objective: dimension must be >= 1");
    Objective obj;
    obj.name = name;
    obj.dimension = dimension;
    double bound = 0.0;
    if (name == "sphere") {
        bound = 5.12;
        obj.evaluate = [](const std::vector<double>& x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return s;
        };
    } else if (name == "rastrigin") {
        bound = 5.12;
        obj.evaluate = [](const std::vector<double>& x) {
            double s = 10.0 * static_cast<double>(x.size());
            for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
            return s;
        };
    } else if (name == "rosenbrock") {
        bound = 2.048;
        obj.evaluate = [](const std::vector<double>& x) {
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                double a = x[i + 1] - x[i] * x[i];
                double b = 1.0 - x[i];
                s += 100.0 * a * a + b * b;
            }
            return s;
        };
    } else if (name == "ackley") {
        bound = 32.768;
        obj.evaluate = [](const std::vector<double>& x) {
            double n = static_cast<double>(x.size());
            double sq = 0.0, cs = 0.0;
            for (double v : x) {
                sq += v * v;
                cs += std::cos(2.0 * std::numbers::pi * v);
            }
            return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
                   std::numbers::e;
        };
    } else {
        throw ValidationError("builtin_objective: unknown name '" + name + "'");
    }
    return {std::move(obj), SearchSpace::box(dimension, -bound, bound)};
}

Evaluator::Evaluator(const Objective& objective, const SearchSpace& space,
                     std::size_t max_evaluations)
    : objective_(objective), space_(space), budget_(max_evaluations) {}

void Evaluator::seed_best(const std::vector<double>& position, double fitness) {
    best_position_ = position;
    best_fitness_ = fitness;
}

std::optional<double> Evaluator::try_evaluate(const std::vector<double>& position) {
    if (used_ >= budget_) return std::nullopt;
    if (position.size() != space_.dimension)
        throw DimensionError("Evaluator: position length mismatch");
#ifndef NDEBUG
    for (std::size_t i = 0; i < position.size(); ++i)
        assert(position[i] >= space_.lower[i] && position[i] <= space_.upper[i] &&
               "evaluated position must lie inside the search space");
#endif
    double f;
    try {
        f = objective_.evaluate(position);
    } catch (const std::exception& e) {
        throw std::runtime_error("objective '" + objective_.name + "' failed at evaluation " +
                                 std::to_string(used_ + 1) + ": " + e.what());
    }
    ++used_;
    if (best_position_.empty() || f < best_fitness_) {
        best_fitness_ = f;
        best_position_ = position;
        history_.emplace_back(used_, f);
    }
    return f;
}

OptimizeResult run_optimizer(const Objective& objective, const SearchSpace& space,
                             const OptimizerSpec& spec, RngStream rng) {
    spec.validate();
    space.validate();
    if (objective.dimension != space.dimension)
        throw DimensionError("run_optimizer: objective dimension " +
                             std::to_string(objective.dimension) + " != space dimension " +
                             std::to_string(space.dimension));

    Evaluator eval(objective, space, spec.max_evaluations);
    nia::AlgorithmState state = nia::init_state(spec, eval, space, rng);
    while (!eval.exhausted()) {
        const std::size_t used_before = eval.used();
        nia::step_state(spec, state, eval, space, rng);
        if (eval.used() == used_before) {
            // Fully stagnant generation: burn one evaluation on a fresh
            // uniform sample so the budget clock always advances.
            std::vector<double> probe(space.dimension);
            for (std::size_t d = 0; d < space.dimension; ++d)
                probe[d] = rng.uniform(space.lower[d], space.upper[d]);
            (void)eval.try_evaluate(probe);
        }
    }

    OptimizeResult result;
    result.best_position = eval.best_position();
    result.best_fitness = eval.best_fitness();
    result.evaluations_used = eval.used();
    result.history = eval.history();
    result.final_step_partial = state.last_step_partial;
    return result;
}

} // namespace niafs::opt
