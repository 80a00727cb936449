#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "niafs/config.hpp"
#include "niafs/dataset.hpp"
#include "niafs/rng.hpp"

namespace niafs::data {

// Untyped CSV contents, header + string cells.
struct RawTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name) const; // throws IngestError
    bool has_column(const std::string& name) const;
};

// RFC-4180-style reader: quoted fields, doubled quotes, embedded
// delimiters and newlines.
RawTable load_csv_file(const std::string& path, char delimiter = ',');
RawTable parse_csv(const std::string& text, char delimiter = ',');
void write_csv(const RawTable& table, const std::string& path);

struct BinRule {
    std::vector<double> edges; // strictly increasing
    std::vector<int> codes;    // edges.size() + 1 entries
    void validate() const;
};

// Value -> bin code; left-inclusive edges, bottom catch-all, top saturation.
int bin_value(double value, const BinRule& rule);
std::vector<int> bin_numeric(const std::vector<double>& values, const std::vector<double>& edges,
                             const std::vector<int>& codes);

struct LabelRule {
    enum class Kind { DirectBinary, ThresholdPass };
    Kind kind = Kind::DirectBinary;
    double cutoff = 0.0;
    bool inclusive = true; // pass at exactly the cutoff
};

std::vector<int> binarize_label(const std::vector<double>& values, const LabelRule& rule);

enum class ScaleMode { MinMax01, None };

// The declarative step-1 recipe: which columns are categorical, how to
// bin, how to binarize the label, how to scale.
struct PreprocessSpec {
    std::vector<std::string> categorical_columns;
    std::map<std::string, BinRule> bin_rules;
    std::vector<std::string> ignore_columns;
    std::string label_column;
    LabelRule label_rule;
    ScaleMode scale = ScaleMode::MinMax01;
    char delimiter = ',';

    void validate() const;
    // Reads the [dataset] (and optional [bins]) sections of a schema file.
    static PreprocessSpec from_config(const Config& cfg);
    static PreprocessSpec from_file(const std::string& path);
};

struct IngestReport {
    std::size_t rows_in = 0;
    std::size_t rows_kept = 0;
    std::size_t rows_dropped = 0;
};

struct IngestResult {
    Dataset dataset;
    IngestReport report;
};

// Whole step-1 pipeline: load CSV, encode categoricals (first-appearance
// order), bin, binarize the label, drop rows with missing values
// (counted), optionally min-max scale to [0, 1].
IngestResult ingest_csv(const std::string& path, const PreprocessSpec& spec);
IngestResult ingest_table(const RawTable& table, const PreprocessSpec& spec);

// First-appearance-order integer codes; the map lands in `encoding`.
std::vector<int> encode_categorical(const std::vector<std::string>& values,
                                    ColumnEncoding& encoding);
// Stored-map application; unseen categories get code map.size().
int apply_category_code(const ColumnEncoding& encoding, const std::string& value);

struct TrainTestSplit {
    Dataset train;
    Dataset test;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

// |train| = round(train_fraction * n); stratified keeps per-class
// proportions within one row; deterministic per rng.
TrainTestSplit split_train_test(const Dataset& dataset, double train_fraction, bool stratified,
                                RngStream rng);

struct MinMaxScaler {
    std::vector<double> min;
    std::vector<double> range; // 0 for constant columns
    Dataset apply(const Dataset& set) const;
};

struct ScaleResult {
    Dataset train;
    Dataset test;
    MinMaxScaler scaler;
};

// Min-max to [0, 1] fit on train only; constant columns map to 0; test
// values clipped into [0, 1].
ScaleResult scale_features(const Dataset& train, const Dataset& test);

// ---- clickstream aggregation ------------------------------------------------

struct AggregateReport {
    std::size_t events_total = 0;
    std::size_t events_counted = 0;
    std::size_t events_rejected_action = 0;
    std::size_t events_rejected_timestamp = 0;
    std::size_t events_unlabeled = 0;
    std::map<std::string, std::size_t> rejected_actions;
};

struct AggregateResult {
    RawTable table; // enrollment_id, one count column per vocab action, label
    AggregateReport report;
};

// Per-enrollment action counts over a declared vocabulary, joined with the
// label file; enrollments without events get zero rows; out-of-vocabulary
// actions land in the reject report.
AggregateResult aggregate_events(const RawTable& events, const RawTable& labels,
                                 const std::vector<std::string>& vocabulary);

std::vector<std::string> load_vocabulary(const std::string& path);

// Audit output: processed features + label.
void write_dataset_csv(const Dataset& dataset, const std::string& path);

} // namespace niafs::data
