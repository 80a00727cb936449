#include <doctest.h>

#include <cmath>

#include "niafs/errors.hpp"
#include "niafs/feature_selection.hpp"

using namespace niafs;
using namespace niafs::fs;

namespace {

// n rows, d columns; feature 0 fully determines the label, the rest are
// uniform noise.
data::Dataset planted(std::size_t n, std::size_t d, std::uint64_t seed,
                      std::vector<std::size_t> informative = {0}) {
    RngStream rng(seed);
    std::vector<double> f(n * d);
    std::vector<int> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        double signal = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            f[r * d + c] = rng.uniform();
        }
        for (std::size_t c : informative) signal += f[r * d + c];
        const double cut = 0.5 * static_cast<double>(informative.size());
        y[r] = signal > cut ? 1 : 0;
        // keep a margin so knn is clean near the boundary
        if (std::fabs(signal - cut) < 0.08 * static_cast<double>(informative.size())) {
            for (std::size_t c : informative) f[r * d + c] = y[r] ? rng.uniform(0.6, 1.0)
                                                                  : rng.uniform(0.0, 0.4);
        }
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
    return data::Dataset::make(std::move(f), std::move(y), std::move(names));
}

} // namespace

TEST_CASE("binarize_position thresholds at >= 0.5 by default") {
    const auto mask = binarize_position({0.49, 0.5, 0.51});
    CHECK(mask.included == std::vector<bool>{false, true, true});
    CHECK(mask.source_position == std::vector<double>{0.49, 0.5, 0.51});

    CHECK(binarize_position({0.0, 0.0}).count() == 0);
    CHECK(binarize_position({1.0, 1.0}).count() == 2);
    CHECK(binarize_position({1.0, 0.2, 0.7}).bits() == "101");

    CHECK_THROWS_AS(binarize_position({0.5}, 0.0), ValidationError);
    CHECK_THROWS_AS(binarize_position({std::nan("")}, 0.5), ValidationError);
}

TEST_CASE("threshold monotonicity: raising it never adds a feature") {
    RngStream rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> pos(8);
        for (auto& p : pos) p = rng.uniform();
        const double t1 = rng.uniform(0.05, 0.5);
        const double t2 = rng.uniform(t1, 0.95);
        const auto lo = binarize_position(pos, t1);
        const auto hi = binarize_position(pos, t2);
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (hi.included[i]) CHECK(lo.included[i]);
    }
}

TEST_CASE("fitness of the all-false mask is the penalty 1.0") {
    const auto set = planted(60, 3, 1);
    FitnessSpec spec;
    FeatureMask empty;
    empty.included.assign(3, false);
    empty.source_position.assign(3, 0.0);
    CHECK(fitness_of_mask(empty, set, spec, RngStream(2)) == 1.0);
}

TEST_CASE("weighted fitness prefers smaller masks at equal accuracy") {
    // Feature 0 separates perfectly; features 1-3 duplicate it, so accuracy
    // is 1.0 for the all-true and the single-feature masks alike.
    const std::size_t n = 60;
    std::vector<double> f;
    std::vector<int> y;
    RngStream rng(7);
    for (std::size_t r = 0; r < n; ++r) {
        const int label = r % 2;
        const double v = label ? rng.uniform(0.8, 1.0) : rng.uniform(0.0, 0.2);
        f.insert(f.end(), {v, v, v, v});
        y.push_back(label);
    }
    const auto set = data::Dataset::make(f, y, {"a", "b", "c", "d"});

    FitnessSpec spec;
    spec.alpha = 0.99;
    const RngStream rng_eval(3);
    const auto full = fitness_of_mask(binarize_position({1, 1, 1, 1}), set, spec, rng_eval);
    const auto single = fitness_of_mask(binarize_position({1, 0, 0, 0}), set, spec, rng_eval);
    CHECK(full == doctest::Approx(0.99 * 0.0 + 0.01 * 1.0).epsilon(1e-9));
    CHECK(single == doctest::Approx(0.99 * 0.0 + 0.01 * 0.25).epsilon(1e-9));
    CHECK(single < full);
}

TEST_CASE("fitness is deterministic and memo-safe per mask") {
    const auto set = planted(80, 5, 9);
    FitnessSpec spec;
    const RngStream rng(11);
    const auto mask = binarize_position({1, 0, 1, 0, 1});
    const double a = fitness_of_mask(mask, set, spec, rng);
    const double b = fitness_of_mask(mask, set, spec, rng);
    CHECK(a == b);
}

TEST_CASE("exhaustive oracle picks the predictive feature") {
    const auto set = planted(120, 2, 13);
    FitnessSpec spec;
    const auto oracle = exhaustive_oracle(set, spec, RngStream(17));
    CHECK(oracle.mask.included == std::vector<bool>{true, false});
    CHECK(oracle.masks_evaluated == 3);

    const auto one = planted(40, 1, 3);
    const auto trivial = exhaustive_oracle(one, spec, RngStream(1));
    CHECK(trivial.mask.included == std::vector<bool>{true});

    CHECK_THROWS_AS(exhaustive_oracle(planted(30, 13, 1), spec, RngStream(1)), ValidationError);
}

TEST_CASE("oracle tie rule prefers the earliest mask") {
    // Two identical columns: masks {0} and {1} produce identical fitness;
    // ascending enumeration keeps {0}.
    std::vector<double> f;
    std::vector<int> y;
    RngStream rng(21);
    for (int r = 0; r < 40; ++r) {
        const int label = r % 2;
        const double v = label ? rng.uniform(0.7, 1.0) : rng.uniform(0.0, 0.3);
        f.insert(f.end(), {v, v});
        y.push_back(label);
    }
    const auto set = data::Dataset::make(f, y, {"a", "b"});
    FitnessSpec spec;
    const auto oracle = exhaustive_oracle(set, spec, RngStream(5));
    CHECK(oracle.mask.included == std::vector<bool>{true, false});
}

TEST_CASE("select_features recovers a planted pair") {
    // Features 0 and 3 jointly determine the label; the other four are noise.
    const auto set = planted(500, 6, 11, {0, 3});
    FitnessSpec fitness;
    opt::OptimizerSpec optimizer;
    optimizer.algorithm = opt::Algorithm::CuckooSearch;
    optimizer.population_size = 15;
    optimizer.max_evaluations = 900;
    const auto result = select_features(set, optimizer, fitness, RngStream(11));
    CHECK(result.mask.included[0]);
    CHECK(result.mask.included[3]);
    CHECK(result.selected_count >= 1);
    CHECK(result.selected_count == result.mask.count());

    // The 2^6-subset enumeration confirms {0, 3} is part of the optimum and
    // that the optimizer landed close to it.
    const auto oracle = exhaustive_oracle(set, fitness, RngStream(11));
    CHECK(oracle.mask.included[0]);
    CHECK(oracle.mask.included[3]);
    CHECK(result.wrapper_fitness <= oracle.fitness + 0.02);
}

TEST_CASE("d=1 dataset always selects its only feature") {
    const auto set = planted(50, 1, 19);
    FitnessSpec fitness;
    opt::OptimizerSpec optimizer;
    optimizer.algorithm = opt::Algorithm::PSO;
    optimizer.population_size = 5;
    optimizer.max_evaluations = 60;
    const auto result = select_features(set, optimizer, fitness, RngStream(2));
    CHECK(result.mask.included == std::vector<bool>{true});
}

TEST_CASE("constant-label dataset is rejected") {
    std::vector<double> f = {1, 2, 3, 4};
    std::vector<int> y = {1, 1, 1, 1};
    const auto set = data::Dataset::make(f, y, {"x"});
    FitnessSpec fitness;
    opt::OptimizerSpec optimizer;
    CHECK_THROWS_AS(select_features(set, optimizer, fitness, RngStream(1)), ValidationError);
}

TEST_CASE("select and oracle agree on the fitness stream") {
    // Identical parent rng means identical per-mask fitness values, so the
    // optimizer can never beat the oracle.
    const auto set = planted(150, 5, 23, {1});
    FitnessSpec fitness;
    opt::OptimizerSpec optimizer;
    optimizer.algorithm = opt::Algorithm::MonkeyKingEvolution;
    optimizer.population_size = 10;
    optimizer.max_evaluations = 600;
    const RngStream shared(31);
    const auto sel = select_features(set, optimizer, fitness, shared);
    const auto oracle = exhaustive_oracle(set, fitness, shared);
    CHECK(sel.wrapper_fitness >= oracle.fitness - 1e-15);
    const double refit = fitness_of_mask(sel.mask, set, fitness, shared.derive(kFitnessStream));
    CHECK(refit == doctest::Approx(sel.wrapper_fitness).epsilon(1e-12));
}

TEST_CASE("classifier failures propagate with mask context") {
    const auto set = planted(60, 3, 2);
    FitnessSpec spec;
    spec.classifier = ml::ClassifierSpec::of(ml::ClassifierKind::TestFail);
    const auto mask = binarize_position({1.0, 0.0, 1.0});
    try {
        fitness_of_mask(mask, set, spec, RngStream(1));
        FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("101") != std::string::npos);
    }
}

TEST_CASE("protocol ids round trip") {
    CHECK(parse_protocol("paper_faithful") == Protocol::PaperFaithful);
    CHECK(parse_protocol("leakage_safe") == Protocol::LeakageSafe);
    CHECK(protocol_id(Protocol::LeakageSafe) == "leakage_safe");
    CHECK_THROWS_AS(parse_protocol("yolo"), ValidationError);
}

TEST_CASE("leakage_safe protocol evaluates on inner folds only") {
    const auto set = planted(90, 4, 29);
    FitnessSpec spec;
    spec.protocol = Protocol::LeakageSafe;
    spec.inner_folds = 3;
    const auto mask = binarize_position({1, 1, 0, 0});
    const double f = fitness_of_mask(mask, set, spec, RngStream(4));
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f == fitness_of_mask(mask, set, spec, RngStream(4)));
}
