#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "niafs/rng.hpp"

namespace niafs::opt {

// Box-bounded continuous search space.
struct SearchSpace {
    std::size_t dimension = 0;
    std::vector<double> lower;
    std::vector<double> upper;

    static SearchSpace box(std::size_t dimension, double lo, double hi);
    void validate() const;
    double range(std::size_t i) const { return upper[i] - lower[i]; }
    double mean_range() const;
};

// Pure scalar objective, lower is better. Evaluation must be
// deterministic in its input vector.
struct Objective {
    std::string name;
    std::size_t dimension = 0;
    std::function<double(const std::vector<double>&)> evaluate;
};

enum class Algorithm {
    PSO,
    ABC,
    Bat,
    Firefly,
    CatSwarm,
    BFO,
    CuckooSearch,
    GravitationalSearch,
    ForestOptimization,
    MonarchButterfly,
    MonkeyKingEvolution,
};

inline constexpr std::size_t kAlgorithmCount = 11;

// All 11, in the fixed reporting order.
const std::vector<Algorithm>& all_algorithms();

// Short identifier ("PSO") and the long table name
// ("ParticleSwarmAlgorithm"); parse_algorithm accepts either.
std::string algorithm_id(Algorithm a);
std::string algorithm_display_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct OptimizerSpec {
    Algorithm algorithm = Algorithm::PSO;
    std::size_t population_size = 30;
    std::size_t max_evaluations = 15000;
    // Algorithm-specific hyperparameters; unknown keys are rejected by
    // validate() against the per-algorithm schema (see algorithms.hpp).
    std::map<std::string, double> params;

    void validate() const;
    // Defaults merged with overrides, validated.
    std::map<std::string, double> resolved_params() const;
};

struct OptimizeResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::size_t evaluations_used = 0;
    // (evaluation count, best fitness so far) recorded at every improvement.
    std::vector<std::pair<std::size_t, double>> history;
    // True when the budget ran out inside a generation and the final
    // step was only partially applied.
    bool final_step_partial = false;
};

// Componentwise projection into [lower, upper].
std::vector<double> clamp_to_bounds(const std::vector<double>& position, const SearchSpace& space);

// n vectors uniform within bounds.
std::vector<std::vector<double>> initialize_population(const SearchSpace& space, std::size_t n,
                                                       RngStream& rng);

// Standard test functions with canonical bounds, global minimum 0.
// Names: sphere, rastrigin, rosenbrock, ackley.
std::pair<Objective, SearchSpace> builtin_objective(const std::string& name, std::size_t dimension);

// Budget choke point: every objective evaluation in the framework goes
// through one of these. Tracks the incumbent and its history.
class Evaluator {
public:
    Evaluator(const Objective& objective, const SearchSpace& space, std::size_t max_evaluations);

    // nullopt once the budget is exhausted; the caller must then abandon
    // the candidate and unwind.
    std::optional<double> try_evaluate(const std::vector<double>& position);

    bool exhausted() const { return used_ >= budget_; }
    std::size_t used() const { return used_; }
    std::size_t remaining() const { return budget_ - used_; }
    std::size_t budget() const { return budget_; }
    double budget_fraction() const {
        return budget_ == 0 ? 1.0 : static_cast<double>(used_) / static_cast<double>(budget_);
    }

    bool has_best() const { return !best_position_.empty(); }
    const std::vector<double>& best_position() const { return best_position_; }
    double best_fitness() const { return best_fitness_; }
    void seed_best(const std::vector<double>& position, double fitness);

    const std::vector<std::pair<std::size_t, double>>& history() const { return history_; }

private:
    const Objective& objective_;
    const SearchSpace& space_;
    std::size_t budget_;
    std::size_t used_ = 0;
    std::vector<double> best_position_;
    double best_fitness_ = 0.0;
    std::vector<std::pair<std::size_t, double>> history_;
};

// Runs spec.algorithm on the objective until the evaluation budget is
// spent. Deterministic in (objective, space, spec, rng).
OptimizeResult run_optimizer(const Objective& objective, const SearchSpace& space,
                             const OptimizerSpec& spec, RngStream rng);

} // namespace niafs::opt
