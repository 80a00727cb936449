#include "niafs/reference_tables.hpp"

namespace niafs::bench {

namespace {

std::vector<ReferenceTable> build_tables() {
    std::vector<ReferenceTable> tables;

    // Clickstream results (SVM column carries a reported std).
    {
        ReferenceTable t;
        t.dataset = "xuetangx";
        t.classifier_columns = {"SVM", "Random Forests", "KNN", "Dtree", "ANN"};
        auto row = [&](std::string label, int features, double svm, double svm_std, double rf,
                       double knn, double dtree, double ann) {
            t.rows.push_back(
                {std::move(label), features, {svm, rf, knn, dtree, ann}, svm_std, {}});
        };
        row("ParticleSwarmAlgorithm", 8, 0.868, 0.019, 0.859, 0.859, 0.813, 0.834);
        row("ArtificialBeeColonyAlgorithm", 11, 0.836, 0.021, 0.84, 0.835, 0.794, 0.806);
        row("BatAlgorithm", 10, 0.86, 0.018, 0.851, 0.843, 0.802, 0.822);
        row("CatSwarmOptimization", 1, 0.871, 0.0106, 0.859, 0.855, 0.852, 0.834);
        row("BacterialForagingOptimization", 14, 0.875, 0.006, 0.861, 0.859, 0.809, 0.838);
        row("CuckooSearch", 9, 0.88, 0.012, 0.871, 0.867, 0.828, 0.847);
        row("FireflyAlgorithm", 9, 0.868, 0.015, 0.855, 0.86, 0.799, 0.84);
        row("ForestOptimizationAlgorithm", 10, 0.866, 0.010, 0.855, 0.866, 0.807, 0.826);
        row("MonarchButterflyOptimization", 11, 0.88, 0.015, 0.874, 0.864, 0.836, 0.843);
        row("MonkeyKingEvolutionV1", 9, 0.859, 0.015, 0.856, 0.813, 0.812, 0.828);
        row("Baseline", 32, 0.855, 0.005, 0.869, 0.855, 0.798, 0.827);
        tables.push_back(std::move(t));
    }

    // Single-course grade prediction. The source table lists CuckooSearch
    // twice with different rows; both are kept under -a / -b suffixes.
    {
        ReferenceTable t;
        t.dataset = "student";
        t.classifier_columns = {"SVM", "Random Forests", "Dtree", "KNN"};
        auto row = [&](std::string label, std::optional<int> features, double svm, double rf,
                       double dtree, double knn) {
            t.rows.push_back({std::move(label), features, {svm, rf, dtree, knn}, {}, {}});
        };
        row("ParticleSwarmAlgorithm", 15, 0.908, 0.969, 0.931, 0.877);
        row("ArtificialBeeColonyAlgorithm", 16, 0.915, 0.977, 0.954, 0.892);
        row("BatAlgorithm", 19, 0.923, 0.985, 0.954, 0.908);
        row("CatSwarmOptimization", 7, 0.962, 0.962, 0.962, 0.915);
        row("BacterialForagingOptimization", 18, 0.908, 0.954, 0.931, 0.846);
        row("CuckooSearch-a", 11, 0.915, 0.985, 0.992, 0.908);
        row("CuckooSearch-b", 11, 0.938, 0.969, 0.954, 0.908);
        row("FireflyAlgorithm", 8, 0.938, 0.985, 0.954, 0.954);
        row("ForestOptimizationAlgorithm", 16, 0.938, 0.985, 0.954, 0.877);
        row("MonarchButterflyOptimization", 11, 0.938, 0.954, 0.938, 0.938);
        row("MonkeyKingEvolutionV1", 18, 0.946, 0.969, 0.969, 0.900);
        row("Baseline", std::nullopt, 0.877, 0.969, 0.938, 0.869);
        tables.push_back(std::move(t));
    }

    // Multi-course grades. The BatAlgorithm ANN cell is kept verbatim but
    // flagged: 0.034965 sits amid ~0.95 neighbours.
    {
        ReferenceTable t;
        t.dataset = "multicourse";
        t.classifier_columns = {"SVM", "Random Forests", "Dtree", "KNN", "ANN"};
        auto row = [&](std::string label, std::optional<int> features, double svm, double rf,
                       double dtree, double knn, double ann, bool ann_anomaly = false) {
            ReferenceRow r{std::move(label), features, {svm, rf, dtree, knn, ann}, {}, {}};
            if (ann_anomaly) r.anomaly = {false, false, false, false, true};
            t.rows.push_back(std::move(r));
        };
        row("ParticleSwarmAlgorithm", 4, 0.629803, 0.622378, 0.622378, 0.601399, 0.951049);
        row("ArtificialBeeColonyAlgorithm", 3, 0.622906, 0.65035, 0.643357, 0.27972, 0.958042);
        row("BatAlgorithm", 6, 0.622414, 0.622378, 0.573427, 0.636364, 0.034965, true);
        row("CatSwarmOptimization", 3, 0.615025, 0.643357, 0.643357, 0.65035, 0.958042);
        row("BacterialForagingOptimization", 4, 0.664039, 0.678322, 0.664336, 0.671329, 0.986014);
        row("CuckooSearch-a", 4, 0.629557, 0.601399, 0.587413, 0.573427, 0.993007);
        row("CuckooSearch-b", 4, 0.706404, 0.65035, 0.65035, 0.636364, 0.986014);
        row("FireflyAlgorithm", 6, 0.685714, 0.678322, 0.622378, 0.671329, 0.972028);
        row("ForestOptimizationAlgorithm", 5, 0.580788, 0.615385, 0.58042, 0.636364, 0.965035);
        row("MonarchButterflyOptimization", 4, 0.657389, 0.636364, 0.636364, 0.601399, 0.958042);
        row("MonkeyKingEvolutionV1", 6, 0.657635, 0.58042, 0.531469, 0.601399, 0.986014);
        row("Baseline", std::nullopt, 0.685222, 0.671329, 0.538462, 0.678322, 0.972028);
        tables.push_back(std::move(t));
    }

    return tables;
}

} // namespace

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = build_tables();
    return tables;
}

const ReferenceTable* find_reference_table(const std::string& dataset) {
    for (const auto& t : reference_tables())
        if (t.dataset == dataset) return &t;
    return nullptr;
}

} // namespace niafs::bench
