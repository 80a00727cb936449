#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "niafs/classifiers.hpp"
#include "niafs/data_pipeline.hpp"
#include "niafs/feature_selection.hpp"
#include "niafs/optimize.hpp"
#include "niafs/reference_tables.hpp"

namespace niafs::bench {

// Everything a grid run needs, loadable from one config file.
struct RunConfig {
    std::string dataset_path;
    std::string schema_path;
    data::PreprocessSpec preprocess;

    std::vector<opt::Algorithm> algorithms = opt::all_algorithms();
    std::vector<ml::ClassifierKind> classifiers = ml::default_classifier_grid();
    std::size_t repeats = 10;
    std::uint64_t master_seed = 42;

    double threshold = 0.5;
    double alpha = 0.99;
    fs::Protocol protocol = fs::Protocol::PaperFaithful;
    std::size_t inner_folds = 3;

    std::size_t population = 30;
    std::size_t max_evaluations = 15000;
    ml::ClassifierSpec wrapper = ml::ClassifierSpec::of(ml::ClassifierKind::KNN);
    ml::ClassifierSpec classifier_params; // hyperparameters shared by grid columns

    std::string output_dir = "out";
    std::string reference; // optional reference-table name for the delta report

    void validate() const;
};

// INI config; unknown keys and sections are rejected by name.
RunConfig load_config(const std::string& path);

struct CellStats {
    bool failed = false;
    std::string error;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    double mean_f1 = 0.0;
    double mean_auc = 0.0;
};

struct RepeatDetail {
    std::string algorithm;
    std::string classifier;
    std::size_t repeat = 0;
    std::string mask_bits;
    std::size_t feature_count = 0;
    double accuracy = 0.0;
    double f1 = 0.0;
    double auc = 0.0;
    bool failed = false;
    std::string error;
};

struct GridRow {
    std::string algorithm; // display name, or "Baseline"
    std::size_t feature_count = 0; // modal selected count; d for the baseline
    std::vector<CellStats> cells;  // aligned with GridResult::classifier_names
};

struct GridResult {
    std::vector<std::string> classifier_names;
    std::vector<GridRow> rows; // algorithm rows in config order, then Baseline
    std::vector<RepeatDetail> details;

    bool any_failed() const;
    const GridRow* find_row(const std::string& algorithm) const;
};

// The whole grid pipeline: per repeat, split 4:1; per algorithm, select
// features (on the full data under paper_faithful, on the training
// partition under leakage_safe); per classifier, train on the masked
// train split and score the masked test split; aggregate mean +- std.
// Cells run concurrently (NIAFS_WORKERS), aggregation order is fixed, and
// the result is a pure function of the config.
GridResult run_grid(const RunConfig& config);

// CSV keeps full precision (%.17g) so emit -> parse round-trips exactly;
// markdown renders mean+-std to 3 decimals. Failed cells carry FAIL.
std::string render_csv(const GridResult& result);
std::string render_markdown(const GridResult& result);
void emit_report_csv(const GridResult& result, const std::string& path);
void emit_report_markdown(const GridResult& result, const std::string& path);
void emit_details_csv(const GridResult& result, const std::string& path);

GridResult parse_grid_csv_text(const std::string& text);
GridResult parse_grid_csv(const std::string& path);

// Per-cell deltas against an embedded reference table, |delta| <= 0.02
// flagged as matching, plus the modal-winner summary. Unknown dataset
// names produce an explicit no-reference notice rather than an error.
std::string compare_to_reference(const GridResult& result, const std::string& dataset);

} // namespace niafs::bench
