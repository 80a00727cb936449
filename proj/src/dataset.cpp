#include "niafs/dataset.hpp"

#include <set>

#include "niafs/errors.hpp"

namespace niafs::data {

Dataset Dataset::make(std::vector<double> features, std::vector<int> labels,
                      std::vector<std::string> feature_names,
                      std::vector<ColumnEncoding> encodings) {
    const std::size_t n = labels.size();
    const std::size_t d = feature_names.size();
    if (features.size() != n * d)
        throw ValidationError("Dataset: feature matrix size " + std::to_string(features.size()) +
                              " != rows*cols " + std::to_string(n * d));
    for (int y : labels)
        if (y != 0 && y != 1) throw ValidationError("Dataset: labels must be 0 or 1");
    std::set<std::string> seen;
    for (const auto& name : feature_names)
        if (!seen.insert(name).second)
            throw ValidationError("Dataset: duplicate feature name '" + name + "'");
    if (encodings.empty()) encodings.resize(d);
    if (encodings.size() != d)
        throw ValidationError("Dataset: encodings length must match feature count");

    Dataset ds;
    ds.features_ = std::move(features);
    ds.labels_ = std::move(labels);
    ds.feature_names_ = std::move(feature_names);
    ds.encodings_ = std::move(encodings);
    return ds;
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& indices) const {
    std::vector<double> f;
    f.reserve(indices.size() * cols());
    std::vector<int> y;
    y.reserve(indices.size());
    for (std::size_t r : indices) {
        if (r >= rows()) throw DimensionError("Dataset::select_rows: index out of range");
        const double* src = row(r);
        f.insert(f.end(), src, src + cols());
        y.push_back(labels_[r]);
    }
    return make(std::move(f), std::move(y), feature_names_, encodings_);
}

Dataset Dataset::select_columns(const std::vector<std::size_t>& indices) const {
    std::vector<double> f;
    f.reserve(rows() * indices.size());
    std::vector<std::string> names;
    std::vector<ColumnEncoding> enc;
    for (std::size_t c : indices) {
        if (c >= cols()) throw DimensionError("Dataset::select_columns: index out of range");
        names.push_back(feature_names_[c]);
        enc.push_back(encodings_[c]);
    }
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c : indices) f.push_back(at(r, c));
    return make(std::move(f), labels_, std::move(names), std::move(enc));
}

bool Dataset::has_both_classes() const {
    bool zero = false, one = false;
    for (int y : labels_) {
        zero |= (y == 0);
        one |= (y == 1);
        if (zero && one) return true;
    }
    return false;
}

std::size_t Dataset::count_label(int label) const {
    std::size_t c = 0;
    for (int y : labels_)
        if (y == label) ++c;
    return c;
}

} // namespace niafs::data
