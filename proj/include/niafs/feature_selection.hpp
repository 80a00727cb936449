#pragma once

#include <string>
#include <vector>

#include "niafs/classifiers.hpp"
#include "niafs/dataset.hpp"
#include "niafs/optimize.hpp"
#include "niafs/rng.hpp"

namespace niafs::fs {

// Boolean feature inclusion derived by thresholding a continuous score
// vector; the all-false state is representable but always scored with the
// penalty fitness.
struct FeatureMask {
    std::vector<bool> included;
    std::vector<double> source_position;

    std::size_t count() const;
    bool any() const;
    std::vector<std::size_t> indices() const;
    std::string bits() const; // "0110..." for reports and memo keys
};

// included[i] = position[i] >= threshold.
FeatureMask binarize_position(const std::vector<double>& position, double threshold = 0.5);

enum class Protocol { PaperFaithful, LeakageSafe };

std::string protocol_id(Protocol p);
Protocol parse_protocol(const std::string& name);

// Wrapper objective: alpha * (1 - accuracy) + (1 - alpha) * selected/d,
// minimized. PaperFaithful measures accuracy on one seeded 4:1 internal
// split of whatever dataset it is given; LeakageSafe averages stratified
// inner folds of that same dataset (the caller passes the training
// partition only).
struct FitnessSpec {
    ml::ClassifierSpec classifier = ml::ClassifierSpec::of(ml::ClassifierKind::KNN);
    double alpha = 0.99;
    Protocol protocol = Protocol::PaperFaithful;
    std::size_t inner_folds = 3;
    double threshold = 0.5;
    double internal_train_fraction = 0.8;

    void validate() const;
};

// Deterministic per (mask, rng identity): the evaluation stream is derived
// from the rng argument and a hash of the mask bits, which is what makes
// mask memoization sound. All-false masks return the penalty fitness 1.0
// without touching the classifier.
double fitness_of_mask(const FeatureMask& mask, const data::Dataset& data, const FitnessSpec& spec,
                       const RngStream& rng);

struct SelectionResult {
    FeatureMask mask;
    double wrapper_fitness = 0.0;
    std::size_t selected_count = 0;
    opt::OptimizeResult optimizer_trace;
};

// Runs the optimizer over [0,1]^d against fitness_of_mask and thresholds
// the best position. An all-false winner falls back to the single feature
// with the highest score. The optimizer stream is rng/kOptimizerStream/
// <algorithm>; the fitness stream is rng/kFitnessStream, shared with
// exhaustive_oracle so their fitness values are directly comparable.
SelectionResult select_features(const data::Dataset& data, const opt::OptimizerSpec& optimizer,
                                const FitnessSpec& spec, const RngStream& rng);

struct OracleResult {
    FeatureMask mask;
    double fitness = 0.0;
    std::size_t masks_evaluated = 0;
};

// Brute force over all 2^d - 1 non-empty masks with the same fitness
// stream select_features uses; ties keep the earliest mask in ascending
// bit order (feature 0 = lowest bit).
OracleResult exhaustive_oracle(const data::Dataset& data, const FitnessSpec& spec,
                               const RngStream& rng, std::size_t max_d = 12);

} // namespace niafs::fs
