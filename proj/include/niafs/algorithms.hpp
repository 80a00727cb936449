#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "niafs/optimize.hpp"
#include "niafs/rng.hpp"

namespace niafs::nia {

using opt::Algorithm;
using opt::Evaluator;
using opt::Objective;
using opt::OptimizerSpec;
using opt::SearchSpace;

// ---- per-algorithm auxiliary state -------------------------------------

struct PsoScratch {
    std::vector<std::vector<double>> velocities;
    std::vector<std::vector<double>> personal_best;
    std::vector<double> personal_best_fitness;
};

struct AbcScratch {
    std::vector<std::size_t> trials;
};

struct BatScratch {
    std::vector<std::vector<double>> velocities;
    std::vector<double> loudness;
    double pulse_rate_now = 0.0;
};

struct FireflyScratch {
    double alpha_now = 0.0;
};

struct CatScratch {
    std::vector<std::vector<double>> velocities;
};

struct BfoScratch {
    std::vector<double> health;      // cumulative fitness over the chemotaxis cycle
    std::size_t chemotaxis_sweep = 0;
    std::size_t reproduction_count = 0;
};

struct GsaScratch {
    std::vector<std::vector<double>> velocities;
};

struct ForestScratch {
    std::vector<std::size_t> ages;
    std::size_t area_limit = 0; // resolved at init; 0 in params means initial population
};

struct MkeScratch {};
struct MboScratch {};
struct CuckooScratch {};

using Scratch = std::variant<std::monostate, PsoScratch, AbcScratch, BatScratch, FireflyScratch,
                             CatScratch, BfoScratch, GsaScratch, ForestScratch, MboScratch,
                             MkeScratch, CuckooScratch>;

// Population snapshot between steps. fitnesses[i] is the objective value
// of positions[i] as of its last evaluation; best_* is the incumbent,
// preserved across generations for every algorithm.
struct AlgorithmState {
    std::vector<std::vector<double>> positions;
    std::vector<double> fitnesses;
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::size_t generation = 0;
    bool last_step_partial = false;
    Scratch scratch;

    std::size_t population_size() const { return positions.size(); }
};

// Parameter schema: name -> default. validate() in OptimizerSpec rejects
// keys outside the schema of its algorithm.
const std::map<std::string, double>& algorithm_param_defaults(Algorithm a);

// Range checks for the resolved parameter set (probabilities in [0, 1],
// positive counts, f_min <= f_max). Throws ValidationError naming the key.
void validate_algorithm_params(Algorithm a, const std::map<std::string, double>& params);

// Evaluates the initial population (consumes population_size evaluations)
// and sets up algorithm scratch.
AlgorithmState init_state(const OptimizerSpec& spec, Evaluator& eval, const SearchSpace& space,
                          RngStream& rng);

// One generation. Candidate evaluations stop cleanly when the budget runs
// out (state.last_step_partial set). Incumbent never worsens.
void step_state(const OptimizerSpec& spec, AlgorithmState& state, Evaluator& eval,
                const SearchSpace& space, RngStream& rng);

// Value-in/value-out convenience used by tests: wraps an unlimited-budget
// evaluator seeded with the state's incumbent.
AlgorithmState step_algorithm(Algorithm algorithm, const AlgorithmState& state,
                              const Objective& objective, const SearchSpace& space, RngStream& rng);

// ---- update-rule kernels (hand-checkable pieces) ------------------------

// v' = w*v + c1*r1.(pbest - x) + c2*r2.(gbest - x)
std::vector<double> pso_velocity_update(const std::vector<double>& v, const std::vector<double>& x,
                                        const std::vector<double>& pbest,
                                        const std::vector<double>& gbest, double w, double c1,
                                        double c2, const std::vector<double>& r1,
                                        const std::vector<double>& r2);

// Mantegna sigma_u for the Levy exponent beta in (1, 2].
double levy_sigma(double beta);

// Heavy-tailed step, per dimension: scale * u / |t|^(1/beta),
// u ~ N(0, sigma_u^2), t ~ N(0, 1).
std::vector<double> levy_flight_step(double beta, double scale, RngStream& rng,
                                     std::size_t dimension);

// xi' = xi + beta0 * exp(-gamma * r^2) * (xj - xi) + alpha * noise, r = |xi - xj|
std::vector<double> firefly_move(const std::vector<double>& xi, const std::vector<double>& xj,
                                 double beta0, double gamma, double alpha,
                                 const std::vector<double>& noise);

struct BatUpdate {
    std::vector<double> position;
    std::vector<double> velocity;
    double frequency = 0.0;
};

// frequency = f_min + (f_max - f_min) * rand_f; v' = v + (x - gbest) * f;
// x' = x + v', replaced by a local walk around gbest when the pulse-rate
// gate fires (rng draw > pulse_rate).
BatUpdate bat_update(const std::vector<double>& x, const std::vector<double>& v,
                     const std::vector<double>& gbest, double f_min, double f_max, double rand_f,
                     double loudness, double pulse_rate, RngStream& rng);

// Candidate with one component nudged toward/away from a partner:
// v_j = x_j + phi * (x_j - partner_j).
std::vector<double> abc_neighbor_search(const std::vector<double>& x,
                                        const std::vector<double>& partner, std::size_t dim_index,
                                        double phi);

// Normalized masses from fitness, pairwise gravitational pull, per-agent
// accelerations. rng_weights[i][j] scales the force of attractor j on
// agent i. attractors empty means all agents attract.
std::vector<std::vector<double>> gsa_forces(const std::vector<std::vector<double>>& positions,
                                            const std::vector<double>& fitnesses, double G,
                                            double epsilon,
                                            const std::vector<std::vector<double>>& rng_weights,
                                            const std::vector<std::size_t>& attractors = {});

// Sigmoid squash to [0, 1].
double binarize_probability(double value);

} // namespace niafs::nia
