#include "niafs/feature_selection.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "niafs/data_pipeline.hpp"
#include "niafs/errors.hpp"

namespace niafs::fs {

namespace {

// FNV-1a over the mask bits; the per-mask evaluation stream label.
std::uint64_t mask_hash(const std::vector<bool>& included) {
    std::uint64_t h = 1469598103934665603ULL;
    for (bool b : included) {
        h ^= static_cast<std::uint64_t>(b ? 0x9d : 0x4a);
        h *= 1099511628211ULL;
    }
    return h;
}

// Stratified fold ids 0..k-1, round-robin within each shuffled class pool.
std::vector<std::size_t> stratified_folds(const data::Dataset& set, std::size_t k,
                                          RngStream& rng) {
    std::vector<std::size_t> fold(set.rows());
    std::vector<std::size_t> pool[2];
    for (std::size_t r = 0; r < set.rows(); ++r) pool[set.label(r)].push_back(r);
    for (auto& p : pool) {
        rng.shuffle(p);
        for (std::size_t i = 0; i < p.size(); ++i) fold[p[i]] = i % k;
    }
    return fold;
}

double masked_accuracy(const data::Dataset& sub, const FitnessSpec& spec, RngStream eval_rng) {
    if (spec.protocol == Protocol::PaperFaithful) {
        auto split_rng = eval_rng.derive(0);
        const auto split =
            data::split_train_test(sub, spec.internal_train_fraction, true, split_rng);
        const auto model = ml::fit_classifier(spec.classifier, split.train, eval_rng.derive(1));
        return ml::metric_accuracy(ml::predict_all(*model, split.test), split.test.labels());
    }

    // Leakage-safe: mean accuracy over stratified inner folds.
    auto fold_rng = eval_rng.derive(0);
    const auto folds = stratified_folds(sub, spec.inner_folds, fold_rng);
    double acc_sum = 0.0;
    std::size_t fold_count = 0;
    for (std::size_t f = 0; f < spec.inner_folds; ++f) {
        std::vector<std::size_t> train_idx, test_idx;
        for (std::size_t r = 0; r < sub.rows(); ++r)
            (folds[r] == f ? test_idx : train_idx).push_back(r);
        if (train_idx.empty() || test_idx.empty()) continue;
        const auto train = sub.select_rows(train_idx);
        const auto test = sub.select_rows(test_idx);
        const auto model = ml::fit_classifier(spec.classifier, train, eval_rng.derive(1).derive(f));
        acc_sum += ml::metric_accuracy(ml::predict_all(*model, test), test.labels());
        ++fold_count;
    }
    if (fold_count == 0) throw ValidationError("fitness_of_mask: no usable inner folds");
    return acc_sum / static_cast<double>(fold_count);
}

} // namespace

std::size_t FeatureMask::count() const {
    return static_cast<std::size_t>(std::count(included.begin(), included.end(), true));
}

bool FeatureMask::any() const {
    return std::find(included.begin(), included.end(), true) != included.end();
}

std::vector<std::size_t> FeatureMask::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < included.size(); ++i)
        if (included[i]) out.push_back(i);
    return out;
}

std::string FeatureMask::bits() const {
    std::string s(included.size(), '0');
    for (std::size_t i = 0; i < included.size(); ++i)
        if (included[i]) s[i] = '1';
    return s;
}

FeatureMask binarize_position(const std::vector<double>& position, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ValidationError("binarize_position: threshold must lie in (0, 1)");
    FeatureMask mask;
    mask.source_position = position;
    mask.included.resize(position.size());
    for (std::size_t i = 0; i < position.size(); ++i) {
        if (!std::isfinite(position[i]))
            throw ValidationError("binarize_position: position must be finite");
        mask.included[i] = position[i] >= threshold;
    }
    return mask;
}

std::string protocol_id(Protocol p) {
    return p == Protocol::PaperFaithful ? "paper_faithful" : "leakage_safe";
}

Protocol parse_protocol(const std::string& name) {
    if (name == "paper_faithful") return Protocol::PaperFaithful;
    if (name == "leakage_safe") return Protocol::LeakageSafe;
    throw ValidationError("unknown protocol '" + name + "'");
}

void FitnessSpec::validate() const {
    classifier.validate();
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ValidationError("FitnessSpec.alpha: must lie in (0, 1]");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ValidationError("FitnessSpec.threshold: must lie in (0, 1)");
    if (inner_folds < 2) throw ValidationError("FitnessSpec.inner_folds: must be >= 2");
    if (!(internal_train_fraction > 0.0 && internal_train_fraction < 1.0))
        throw ValidationError("FitnessSpec.internal_train_fraction: must lie in (0, 1)");
}

double fitness_of_mask(const FeatureMask& mask, const data::Dataset& data, const FitnessSpec& spec,
                       const RngStream& rng) {
    spec.validate();
    if (mask.included.size() != data.cols())
        throw DimensionError("fitness_of_mask: mask length != feature count");
    if (data.rows() == 0) throw ValidationError("fitness_of_mask: empty dataset");
    if (!mask.any()) return 1.0; // penalty, no classifier run

    const auto selected = mask.indices();
    const data::Dataset sub = data.select_columns(selected);
    RngStream eval_rng = rng.derive(mask_hash(mask.included));
    double acc;
    try {
        acc = masked_accuracy(sub, spec, std::move(eval_rng));
    } catch (const std::exception& e) {
        throw std::runtime_error("fitness_of_mask failed for mask " + mask.bits() + ": " +
                                 e.what());
    }
    const double size_share =
        static_cast<double>(selected.size()) / static_cast<double>(data.cols());
    return spec.alpha * (1.0 - acc) + (1.0 - spec.alpha) * size_share;
}

SelectionResult select_features(const data::Dataset& data, const opt::OptimizerSpec& optimizer,
                                const FitnessSpec& spec, const RngStream& rng) {
    spec.validate();
    optimizer.validate();
    if (data.cols() < 1) throw ValidationError("select_features: need at least one feature");
    if (!data.has_both_classes())
        throw ValidationError("select_features: dataset must contain both classes");

    const std::size_t d = data.cols();
    const RngStream fitness_rng = rng.derive(kFitnessStream);

    // Masks repeat heavily once the swarm converges; memoization is sound
    // because the evaluation seed depends only on the mask bits.
    auto memo = std::make_shared<std::unordered_map<std::string, double>>();
    opt::Objective objective;
    objective.name = "wrapper_fitness";
    objective.dimension = d;
    objective.evaluate = [&data, &spec, fitness_rng, memo,
                          threshold = spec.threshold](const std::vector<double>& position) {
        const FeatureMask mask = binarize_position(position, threshold);
        const std::string key = mask.bits();
        if (auto it = memo->find(key); it != memo->end()) return it->second;
        const double f = fitness_of_mask(mask, data, spec, fitness_rng);
        memo->emplace(key, f);
        return f;
    };

    const auto space = opt::SearchSpace::box(d, 0.0, 1.0);
    RngStream opt_rng =
        rng.derive(kOptimizerStream).derive(static_cast<std::uint64_t>(optimizer.algorithm));
    auto trace = opt::run_optimizer(objective, space, optimizer, std::move(opt_rng));

    FeatureMask mask = binarize_position(trace.best_position, spec.threshold);
    double fitness = trace.best_fitness;
    if (!mask.any()) {
        // Fall back to the single strongest-scored feature.
        std::size_t best = 0;
        for (std::size_t i = 1; i < d; ++i)
            if (trace.best_position[i] > trace.best_position[best]) best = i;
        mask.included[best] = true;
        fitness = fitness_of_mask(mask, data, spec, fitness_rng);
    }

    SelectionResult result;
    result.selected_count = mask.count();
    result.mask = std::move(mask);
    result.wrapper_fitness = fitness;
    result.optimizer_trace = std::move(trace);
    return result;
}

OracleResult exhaustive_oracle(const data::Dataset& data, const FitnessSpec& spec,
                               const RngStream& rng, std::size_t max_d) {
    spec.validate();
    const std::size_t d = data.cols();
    if (d > max_d)
        throw ValidationError("exhaustive_oracle: dimension " + std::to_string(d) +
                              " exceeds max_d " + std::to_string(max_d));
    const RngStream fitness_rng = rng.derive(kFitnessStream);

    OracleResult best;
    bool have_best = false;
    for (std::uint64_t m = 1; m < (1ULL << d); ++m) {
        FeatureMask mask;
        mask.included.resize(d);
        mask.source_position.assign(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            const bool on = (m >> i) & 1ULL;
            mask.included[i] = on;
            mask.source_position[i] = on ? 1.0 : 0.0;
        }
        const double f = fitness_of_mask(mask, data, spec, fitness_rng);
        ++best.masks_evaluated;
        if (!have_best || f < best.fitness) {
            have_best = true;
            best.fitness = f;
            best.mask = std::move(mask);
        }
    }
    return best;
}

} // namespace niafs::fs
