#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "niafs/errors.hpp"
#include "niafs/harness.hpp"

using namespace niafs;
using namespace niafs::bench;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Small planted dataset on disk: feature a drives the label, b/c are noise.
std::string fixture_csv() {
    static std::string path;
    if (!path.empty()) return path;
    path = temp_path("niafs_grid_fixture.csv");
    RngStream rng(404);
    std::ostringstream out;
    out << "a,b,c,y\n";
    for (int r = 0; r < 120; ++r) {
        const int y = r % 2;
        const double a = y ? rng.uniform(0.65, 1.0) : rng.uniform(0.0, 0.35);
        out << a << ',' << rng.uniform() << ',' << rng.uniform() << ',' << y << '\n';
    }
    write_file(path, out.str());
    return path;
}

RunConfig tiny_config() {
    RunConfig config;
    config.dataset_path = fixture_csv();
    config.preprocess.label_column = "y";
    config.algorithms = {opt::Algorithm::CuckooSearch, opt::Algorithm::PSO};
    config.classifiers = {ml::ClassifierKind::KNN, ml::ClassifierKind::DecisionTree};
    config.repeats = 2;
    config.master_seed = 9;
    config.population = 8;
    config.max_evaluations = 120;
    return config;
}

} // namespace

TEST_CASE("load_config applies defaults and rejects unknown keys") {
    const std::string path = temp_path("niafs_cfg_min.ini");
    write_file(path, "[run]\ndataset = " + fixture_csv() + "\n");
    const auto config = load_config(path);
    CHECK(config.repeats == 10);
    CHECK(config.master_seed == 42);
    CHECK(config.algorithms.size() == opt::kAlgorithmCount);
    CHECK(config.classifiers.size() == 7);
    CHECK(config.population == 30);
    CHECK(config.max_evaluations == 15000);
    CHECK(config.protocol == fs::Protocol::PaperFaithful);
    std::remove(path.c_str());

    const std::string bad_repeats = temp_path("niafs_cfg_rep.ini");
    write_file(bad_repeats, "[run]\ndataset = x.csv\nrepeats = 0\n");
    CHECK_THROWS_AS(load_config(bad_repeats), ValidationError);
    std::remove(bad_repeats.c_str());

    const std::string typo = temp_path("niafs_cfg_typo.ini");
    write_file(typo, "[run]\ndataset = x.csv\n[optimizer]\npopulaton = 30\n");
    CHECK_THROWS_WITH_AS(load_config(typo),
                         "config: unknown key 'populaton' in section [optimizer]",
                         ValidationError);
    std::remove(typo.c_str());
}

TEST_CASE("run_grid: shape, baseline, determinism, repeats=1 std") {
    auto config = tiny_config();
    const auto result = run_grid(config);

    REQUIRE(result.rows.size() == 3); // 2 algorithms + Baseline
    CHECK(result.rows.back().algorithm == "Baseline");
    CHECK(result.rows.back().feature_count == 3);
    CHECK(result.classifier_names == std::vector<std::string>{"KNN", "DecisionTree"});
    for (const auto& row : result.rows) {
        CHECK(row.cells.size() == 2);
        for (const auto& cell : row.cells) {
            CHECK_FALSE(cell.failed);
            CHECK(cell.mean_accuracy >= 0.0);
            CHECK(cell.mean_accuracy <= 1.0);
        }
    }

    const auto again = run_grid(config);
    CHECK(render_csv(result) == render_csv(again));

    config.repeats = 1;
    const auto once = run_grid(config);
    for (const auto& row : once.rows)
        for (const auto& cell : row.cells) CHECK(cell.std_accuracy == 0.0);
}

TEST_CASE("feature selection finds the planted feature in the grid") {
    const auto result = run_grid(tiny_config());
    for (const auto& detail : result.details) {
        if (detail.algorithm == "Baseline" || detail.failed) continue;
        REQUIRE(detail.mask_bits.size() == 3);
        CHECK(detail.mask_bits[0] == '1'); // the planted feature stays in
    }
}

TEST_CASE("leakage_safe grid runs clean and deterministically") {
    auto config = tiny_config();
    config.protocol = fs::Protocol::LeakageSafe;
    config.inner_folds = 3;
    const auto result = run_grid(config);
    CHECK_FALSE(result.any_failed());
    for (const auto& row : result.rows)
        for (const auto& cell : row.cells) {
            CHECK(cell.mean_accuracy >= 0.0);
            CHECK(cell.mean_accuracy <= 1.0);
        }
    const auto again = run_grid(config);
    CHECK(render_csv(result) == render_csv(again));
}

TEST_CASE("csv emit -> parse round-trips exactly") {
    const auto result = run_grid(tiny_config());
    const std::string path = temp_path("niafs_grid.csv");
    emit_report_csv(result, path);
    const auto parsed = parse_grid_csv(path);
    REQUIRE(parsed.rows.size() == result.rows.size());
    CHECK(parsed.classifier_names == result.classifier_names);
    for (std::size_t r = 0; r < result.rows.size(); ++r) {
        CHECK(parsed.rows[r].algorithm == result.rows[r].algorithm);
        CHECK(parsed.rows[r].feature_count == result.rows[r].feature_count);
        for (std::size_t c = 0; c < result.rows[r].cells.size(); ++c) {
            CHECK(parsed.rows[r].cells[c].mean_accuracy == result.rows[r].cells[c].mean_accuracy);
            CHECK(parsed.rows[r].cells[c].std_accuracy == result.rows[r].cells[c].std_accuracy);
        }
    }
    std::remove(path.c_str());
}

TEST_CASE("markdown and csv agree to three decimals") {
    const auto result = run_grid(tiny_config());
    const std::string md = render_markdown(result);
    char expect[64];
    std::snprintf(expect, sizeof expect, "%.3f", result.rows[0].cells[0].mean_accuracy);
    CHECK(md.find(expect) != std::string::npos);
    CHECK(md.find("| Baseline |") != std::string::npos);
}

TEST_CASE("a failing classifier poisons only its own cells") {
    auto config = tiny_config();
    config.classifiers = {ml::ClassifierKind::KNN, ml::ClassifierKind::TestFail};
    const auto result = run_grid(config);
    for (const auto& row : result.rows) {
        CHECK_FALSE(row.cells[0].failed); // KNN fine
        CHECK(row.cells[1].failed);       // injected failure
        CHECK(row.cells[1].error.find("injected") != std::string::npos);
    }
    CHECK(result.any_failed());
    const std::string csv = render_csv(result);
    CHECK(csv.find("FAIL") != std::string::npos);
    // FAIL cells survive the round trip
    const auto parsed = parse_grid_csv_text(csv);
    CHECK(parsed.rows[0].cells[1].failed);
}

TEST_CASE("reference comparison flags matches and counts winners") {
    GridResult fake;
    fake.classifier_names = {"SVM", "RandomForest", "KNN", "DecisionTree", "MLP"};
    GridRow cuckoo;
    cuckoo.algorithm = "CuckooSearch";
    cuckoo.feature_count = 9;
    // Matches the published clickstream row exactly.
    for (double v : {0.88, 0.871, 0.867, 0.828, 0.847}) {
        CellStats cell;
        cell.mean_accuracy = v;
        cuckoo.cells.push_back(cell);
    }
    GridRow base;
    base.algorithm = "Baseline";
    base.feature_count = 32;
    for (double v : {0.855, 0.869, 0.855, 0.798, 0.827}) {
        CellStats cell;
        cell.mean_accuracy = v;
        base.cells.push_back(cell);
    }
    fake.rows = {cuckoo, base};

    const std::string report = compare_to_reference(fake, "xuetangx");
    CHECK(report.find("CuckooSearch,SVM,0.880,0.880,0.000,yes") != std::string::npos);
    CHECK(report.find("most frequent best performer: CuckooSearch") != std::string::npos);

    const std::string missing = compare_to_reference(fake, "unknown_set");
    CHECK(missing.find("no reference table") != std::string::npos);
}

TEST_CASE("embedded reference tables carry the published values") {
    const auto* x = find_reference_table("xuetangx");
    REQUIRE(x != nullptr);
    CHECK(x->rows.size() == 11); // 10 algorithms + baseline
    const auto* student = find_reference_table("student");
    REQUIRE(student != nullptr);
    // CuckooSearch appears twice in the source; both rows are kept.
    int cuckoo_rows = 0;
    for (const auto& row : student->rows)
        if (row.label.rfind("CuckooSearch", 0) == 0) ++cuckoo_rows;
    CHECK(cuckoo_rows == 2);
    const auto* multi = find_reference_table("multicourse");
    REQUIRE(multi != nullptr);
    // The 0.034965 Bat/ANN cell is stored verbatim but flagged.
    for (const auto& row : multi->rows) {
        if (row.label != "BatAlgorithm") continue;
        CHECK(row.values.back() == doctest::Approx(0.034965));
        REQUIRE_FALSE(row.anomaly.empty());
        CHECK(row.anomaly.back());
    }
    CHECK(find_reference_table("GravitationalSearch") == nullptr);
}
