#pragma once

#include <optional>
#include <string>
#include <vector>

namespace niafs::bench {

// One published result row: an algorithm (or "Baseline"), its reported
// feature count, and accuracy per classifier column. anomaly marks values
// carried verbatim despite looking like transcription artifacts.
struct ReferenceRow {
    std::string label;
    std::optional<int> features;
    std::vector<double> values;
    std::optional<double> first_value_std;
    std::vector<bool> anomaly;
};

struct ReferenceTable {
    std::string dataset;
    std::vector<std::string> classifier_columns;
    std::vector<ReferenceRow> rows;
};

// Embedded comparison fixtures keyed by dataset name:
// "xuetangx", "student", "multicourse".
const std::vector<ReferenceTable>& reference_tables();
const ReferenceTable* find_reference_table(const std::string& dataset);

} // namespace niafs::bench
