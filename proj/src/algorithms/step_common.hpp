#pragma once

#include <map>
#include <string>
#include <vector>

#include "niafs/algorithms.hpp"

namespace niafs::nia::detail {

// Resolved hyperparameters for one step.
struct Params {
    const std::map<std::string, double>& values;
    double operator()(const std::string& key) const { return values.at(key); }
};

// Evaluate through the budget choke point; mirrors the incumbent into the
// state. Returns false (and flags the partial step) once the budget is gone.
inline bool try_eval(Evaluator& eval, AlgorithmState& state, const std::vector<double>& position,
                     double& fitness_out) {
    auto f = eval.try_evaluate(position);
    if (!f) {
        state.last_step_partial = true;
        return false;
    }
    fitness_out = *f;
    if (fitness_out < state.best_fitness) {
        state.best_fitness = fitness_out;
        state.best_position = position;
    }
    return true;
}

// Indices 0..n-1 ordered by ascending fitness, ties by index.
std::vector<std::size_t> rank_by_fitness(const std::vector<double>& fitnesses);

void init_pso(AlgorithmState&, const Params&);
void step_pso(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_abc(AlgorithmState&, const Params&);
void step_abc(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_bat(AlgorithmState&, const Params&);
void step_bat(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_firefly(AlgorithmState&, const Params&);
void step_firefly(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_cat_swarm(AlgorithmState&, const Params&);
void step_cat_swarm(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_bfo(AlgorithmState&, const Params&);
void step_bfo(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_cuckoo(AlgorithmState&, const Params&);
void step_cuckoo(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_gsa(AlgorithmState&, const Params&);
void step_gsa(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_forest(AlgorithmState&, const Params&);
void step_forest(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_monarch(AlgorithmState&, const Params&);
void step_monarch(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

void init_monkey_king(AlgorithmState&, const Params&);
void step_monkey_king(AlgorithmState&, const Params&, Evaluator&, const SearchSpace&, RngStream&);

} // namespace niafs::nia::detail
