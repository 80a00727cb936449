#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace niafs::data {

enum class ColumnKind { Numeric, Categorical, Binned };

// Per-column ingestion metadata: how raw values were turned into codes.
struct ColumnEncoding {
    ColumnKind kind = ColumnKind::Numeric;
    // Categorical: raw string -> code, first-appearance order. Unseen
    // categories at predict time map to categories.size().
    std::map<std::string, int> categories;
    // Binned: strictly increasing edges plus codes (edges.size() + 1).
    std::vector<double> bin_edges;
    std::vector<int> bin_codes;
};

// Numeric feature matrix (row major) with binary labels.
class Dataset {
public:
    std::size_t rows() const { return labels_.size(); }
    std::size_t cols() const { return feature_names_.size(); }

    double at(std::size_t row, std::size_t col) const { return features_[row * cols() + col]; }
    double& at(std::size_t row, std::size_t col) { return features_[row * cols() + col]; }
    const double* row(std::size_t r) const { return features_.data() + r * cols(); }

    const std::vector<double>& features() const { return features_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::vector<ColumnEncoding>& encodings() const { return encodings_; }

    int label(std::size_t r) const { return labels_[r]; }

    // Builds and validates (unique names, labels in {0,1}, shape agreement).
    static Dataset make(std::vector<double> features, std::vector<int> labels,
                        std::vector<std::string> feature_names,
                        std::vector<ColumnEncoding> encodings = {});

    // Row subset, same columns.
    Dataset select_rows(const std::vector<std::size_t>& indices) const;
    // Column subset in index order, all rows.
    Dataset select_columns(const std::vector<std::size_t>& indices) const;

    bool has_both_classes() const;
    std::size_t count_label(int label) const;

private:
    std::vector<double> features_;
    std::vector<int> labels_;
    std::vector<std::string> feature_names_;
    std::vector<ColumnEncoding> encodings_;
};

} // namespace niafs::data
