#include "niafs/data_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "niafs/errors.hpp"

namespace niafs::data {

namespace {

std::optional<double> parse_number(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0') return std::nullopt;
    return v;
}

// Loose ISO-8601 shape check: YYYY-MM-DD prefix.
bool timestamp_ok(const std::string& s) {
    const std::string t = trim(s);
    if (t.size() < 10) return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return t[4] == '-' && t[7] == '-';
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::size_t RawTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw IngestError("missing column '" + name + "'");
}

bool RawTable::has_column(const std::string& name) const {
    return std::find(columns.begin(), columns.end(), name) != columns.end();
}

RawTable parse_csv(const std::string& text, char delimiter) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        any = true;
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() || !record.empty()) end_record();
        } else if (c == '\r') {
            // swallow; \r\n handled at \n
        } else {
            field += c;
        }
    }
    if (quoted) throw IngestError("csv: unterminated quoted field");
    if (any && (!field.empty() || !record.empty())) end_record();

    if (records.empty()) throw IngestError("csv: missing header row");
    RawTable table;
    table.columns = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.columns.size())
            throw IngestError("csv: row " + std::to_string(r) + " has " +
                              std::to_string(records[r].size()) + " fields, header has " +
                              std::to_string(table.columns.size()));
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

RawTable load_csv_file(const std::string& path, char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), delimiter);
}

void write_csv(const RawTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << csv_escape(table.columns[c]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(row[c]);
        out << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

void BinRule::validate() const {
    if (edges.empty()) throw ValidationError("BinRule: edges must be non-empty");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i]))
            throw ValidationError("BinRule: edges must be strictly increasing");
    if (codes.size() != edges.size() + 1)
        throw ValidationError("BinRule: need edges + 1 codes, got " + std::to_string(codes.size()));
}

int bin_value(double value, const BinRule& rule) {
    if (value < rule.edges.front()) return rule.codes.front();
    for (std::size_t k = 1; k < rule.edges.size(); ++k)
        if (value < rule.edges[k]) return rule.codes[k];
    return rule.codes.back(); // top saturation
}

std::vector<int> bin_numeric(const std::vector<double>& values, const std::vector<double>& edges,
                             const std::vector<int>& codes) {
    BinRule rule{edges, codes};
    rule.validate();
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = bin_value(values[i], rule);
    return out;
}

std::vector<int> binarize_label(const std::vector<double>& values, const LabelRule& rule) {
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (rule.kind == LabelRule::Kind::DirectBinary) {
            if (v != 0.0 && v != 1.0)
                throw IngestError("binarize_label: direct_binary expects 0/1, got " +
                                  std::to_string(v));
            out[i] = static_cast<int>(v);
        } else {
            out[i] = (rule.inclusive ? v >= rule.cutoff : v > rule.cutoff) ? 1 : 0;
        }
    }
    return out;
}

void PreprocessSpec::validate() const {
    if (label_column.empty()) throw ValidationError("PreprocessSpec: label_column required");
    for (const auto& [col, rule] : bin_rules) rule.validate();
    for (const auto& c : categorical_columns)
        if (c == label_column)
            throw ValidationError("PreprocessSpec: label column cannot be categorical");
}

PreprocessSpec PreprocessSpec::from_config(const Config& cfg) {
    static const std::set<std::string> allowed = {
        "label_column",   "label_rule",     "label_cutoff", "label_cutoff_inclusive",
        "categorical_columns", "ignore_columns", "scale",   "delimiter"};
    for (const auto& section : cfg.section_names()) {
        if (section != "dataset" && section != "bins")
            throw ValidationError("schema: unknown section [" + section + "]");
    }
    for (const auto& key : cfg.keys("dataset"))
        if (!allowed.count(key)) throw ValidationError("schema: unknown key '" + key + "'");

    PreprocessSpec spec;
    spec.label_column = cfg.get("dataset", "label_column");
    const std::string rule = cfg.get_or("dataset", "label_rule", "direct_binary");
    if (rule == "direct_binary") {
        spec.label_rule.kind = LabelRule::Kind::DirectBinary;
    } else if (rule == "threshold_pass") {
        spec.label_rule.kind = LabelRule::Kind::ThresholdPass;
        spec.label_rule.cutoff = cfg.get_double("dataset", "label_cutoff");
        spec.label_rule.inclusive = cfg.get_bool_or("dataset", "label_cutoff_inclusive", true);
    } else {
        throw ValidationError("schema: label_rule must be direct_binary or threshold_pass, got '" +
                              rule + "'");
    }
    if (cfg.has("dataset", "categorical_columns"))
        spec.categorical_columns = cfg.get_list("dataset", "categorical_columns");
    if (cfg.has("dataset", "ignore_columns"))
        spec.ignore_columns = cfg.get_list("dataset", "ignore_columns");
    const std::string scale = cfg.get_or("dataset", "scale", "minmax_01");
    if (scale == "minmax_01") spec.scale = ScaleMode::MinMax01;
    else if (scale == "none") spec.scale = ScaleMode::None;
    else throw ValidationError("schema: scale must be minmax_01 or none, got '" + scale + "'");
    const std::string delim = cfg.get_or("dataset", "delimiter", ",");
    if (delim == "tab") spec.delimiter = '\t';
    else if (delim.size() == 1) spec.delimiter = delim[0];
    else throw ValidationError("schema: delimiter must be one character or 'tab'");

    // [bins]  column = edges=a,b,c codes=w,x,y,z
    for (const auto& column : cfg.keys("bins")) {
        const std::string value = cfg.get("bins", column);
        const auto epos = value.find("edges=");
        const auto cpos = value.find("codes=");
        if (epos == std::string::npos || cpos == std::string::npos || cpos <= epos)
            throw ValidationError("schema: bin rule for '" + column +
                                  "' must look like 'edges=60,70 codes=1,2,3'");
        BinRule rule;
        for (const auto& tok : split(trim(value.substr(epos + 6, cpos - epos - 6)), ',')) {
            if (tok.empty()) continue;
            const auto v = parse_number(tok);
            if (!v) throw ValidationError("schema: bad bin edge '" + tok + "'");
            rule.edges.push_back(*v);
        }
        for (const auto& tok : split(trim(value.substr(cpos + 6)), ',')) {
            if (tok.empty()) continue;
            const auto v = parse_number(tok);
            if (!v) throw ValidationError("schema: bad bin code '" + tok + "'");
            rule.codes.push_back(static_cast<int>(*v));
        }
        rule.validate();
        spec.bin_rules[column] = std::move(rule);
    }
    spec.validate();
    return spec;
}

PreprocessSpec PreprocessSpec::from_file(const std::string& path) {
    return from_config(Config::parse_file(path));
}

std::vector<int> encode_categorical(const std::vector<std::string>& values,
                                    ColumnEncoding& encoding) {
    encoding.kind = ColumnKind::Categorical;
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = encoding.categories.find(values[i]);
        if (it == encoding.categories.end()) {
            const int code = static_cast<int>(encoding.categories.size());
            encoding.categories.emplace(values[i], code);
            out[i] = code;
        } else {
            out[i] = it->second;
        }
    }
    return out;
}

int apply_category_code(const ColumnEncoding& encoding, const std::string& value) {
    auto it = encoding.categories.find(value);
    return it == encoding.categories.end() ? static_cast<int>(encoding.categories.size())
                                           : it->second;
}

IngestResult ingest_table(const RawTable& table, const PreprocessSpec& spec) {
    spec.validate();
    const std::size_t label_col = table.column_index(spec.label_column);
    for (const auto& c : spec.categorical_columns) (void)table.column_index(c);
    for (const auto& [c, rule] : spec.bin_rules) (void)table.column_index(c);
    for (const auto& c : spec.ignore_columns) (void)table.column_index(c);

    const std::set<std::string> categorical(spec.categorical_columns.begin(),
                                            spec.categorical_columns.end());
    const std::set<std::string> ignored(spec.ignore_columns.begin(), spec.ignore_columns.end());

    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c == label_col || ignored.count(table.columns[c])) continue;
        feature_cols.push_back(c);
    }
    if (feature_cols.empty()) throw IngestError("ingest: no feature columns left");

    // Pass 1: find rows with missing values (unparseable numerics, empty
    // categorical cells, missing labels).
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        bool ok = parse_number(table.rows[r][label_col]).has_value();
        for (std::size_t c : feature_cols) {
            if (!ok) break;
            if (categorical.count(table.columns[c])) ok = !trim(table.rows[r][c]).empty();
            else ok = parse_number(table.rows[r][c]).has_value();
        }
        if (ok) kept.push_back(r);
    }

    // Pass 2: encode.
    const std::size_t n = kept.size();
    const std::size_t d = feature_cols.size();
    std::vector<double> features(n * d, 0.0);
    std::vector<std::string> names;
    std::vector<ColumnEncoding> encodings(d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t c = feature_cols[j];
        const std::string& name = table.columns[c];
        names.push_back(name);
        if (categorical.count(name)) {
            std::vector<std::string> raw(n);
            for (std::size_t i = 0; i < n; ++i) raw[i] = trim(table.rows[kept[i]][c]);
            const auto codes = encode_categorical(raw, encodings[j]);
            for (std::size_t i = 0; i < n; ++i) features[i * d + j] = codes[i];
        } else if (auto it = spec.bin_rules.find(name); it != spec.bin_rules.end()) {
            encodings[j].kind = ColumnKind::Binned;
            encodings[j].bin_edges = it->second.edges;
            encodings[j].bin_codes = it->second.codes;
            for (std::size_t i = 0; i < n; ++i)
                features[i * d + j] =
                    bin_value(*parse_number(table.rows[kept[i]][c]), it->second);
        } else {
            encodings[j].kind = ColumnKind::Numeric;
            for (std::size_t i = 0; i < n; ++i)
                features[i * d + j] = *parse_number(table.rows[kept[i]][c]);
        }
    }

    std::vector<double> label_values(n);
    for (std::size_t i = 0; i < n; ++i)
        label_values[i] = *parse_number(table.rows[kept[i]][label_col]);
    std::vector<int> labels = binarize_label(label_values, spec.label_rule);

    if (spec.scale == ScaleMode::MinMax01) {
        for (std::size_t j = 0; j < d; ++j) {
            double lo = features[j], hi = features[j];
            for (std::size_t i = 1; i < n; ++i) {
                lo = std::min(lo, features[i * d + j]);
                hi = std::max(hi, features[i * d + j]);
            }
            const double range = hi - lo;
            for (std::size_t i = 0; i < n; ++i) {
                double& v = features[i * d + j];
                v = range > 0.0 ? (v - lo) / range : 0.0;
            }
        }
    }

    IngestResult result{Dataset::make(std::move(features), std::move(labels), std::move(names),
                                      std::move(encodings)),
                        {table.rows.size(), n, table.rows.size() - n}};
    return result;
}

IngestResult ingest_csv(const std::string& path, const PreprocessSpec& spec) {
    return ingest_table(load_csv_file(path, spec.delimiter), spec);
}

TrainTestSplit split_train_test(const Dataset& dataset, double train_fraction, bool stratified,
                                RngStream rng) {
    const std::size_t n = dataset.rows();
    if (n < 5) throw ValidationError("split_train_test: need at least 5 rows");
    const auto train_n = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(n)));
    if (train_n == 0 || train_n >= n)
        throw ValidationError("split_train_test: degenerate split for this fraction");

    std::vector<std::size_t> train_idx, test_idx;
    if (stratified) {
        if (!dataset.has_both_classes())
            throw ValidationError("split_train_test: stratified split needs both classes");
        std::vector<std::size_t> pool[2];
        for (std::size_t r = 0; r < n; ++r) pool[dataset.label(r)].push_back(r);

        // Largest-remainder apportionment of train slots to the classes.
        const double quota0 =
            static_cast<double>(train_n) * static_cast<double>(pool[0].size()) /
            static_cast<double>(n);
        std::size_t take0 = static_cast<std::size_t>(std::floor(quota0));
        std::size_t take1 = static_cast<std::size_t>(
            std::floor(static_cast<double>(train_n) * static_cast<double>(pool[1].size()) /
                       static_cast<double>(n)));
        while (take0 + take1 < train_n) {
            const double frac0 = quota0 - std::floor(quota0);
            if (frac0 >= 0.5 && take0 < pool[0].size()) ++take0;
            else if (take1 < pool[1].size()) ++take1;
            else ++take0;
        }
        rng.shuffle(pool[0]);
        rng.shuffle(pool[1]);
        for (std::size_t i = 0; i < pool[0].size(); ++i)
            (i < take0 ? train_idx : test_idx).push_back(pool[0][i]);
        for (std::size_t i = 0; i < pool[1].size(); ++i)
            (i < take1 ? train_idx : test_idx).push_back(pool[1][i]);
    } else {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(order);
        train_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_n));
        test_idx.assign(order.begin() + static_cast<std::ptrdiff_t>(train_n), order.end());
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());

    TrainTestSplit split{dataset.select_rows(train_idx), dataset.select_rows(test_idx),
                         std::move(train_idx), std::move(test_idx)};
    return split;
}

Dataset MinMaxScaler::apply(const Dataset& set) const {
    if (set.cols() != min.size()) throw DimensionError("MinMaxScaler: column count mismatch");
    std::vector<double> features = set.features();
    const std::size_t d = set.cols();
    for (std::size_t r = 0; r < set.rows(); ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            double& v = features[r * d + c];
            v = range[c] > 0.0 ? std::clamp((v - min[c]) / range[c], 0.0, 1.0) : 0.0;
        }
    }
    return Dataset::make(std::move(features), set.labels(), set.feature_names(), set.encodings());
}

ScaleResult scale_features(const Dataset& train, const Dataset& test) {
    if (train.rows() == 0) throw ValidationError("scale_features: empty training set");
    MinMaxScaler scaler;
    const std::size_t d = train.cols();
    scaler.min.resize(d);
    scaler.range.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
        double lo = train.at(0, c), hi = lo;
        for (std::size_t r = 1; r < train.rows(); ++r) {
            lo = std::min(lo, train.at(r, c));
            hi = std::max(hi, train.at(r, c));
        }
        scaler.min[c] = lo;
        scaler.range[c] = hi - lo;
    }
    return ScaleResult{scaler.apply(train), scaler.apply(test), std::move(scaler)};
}

AggregateResult aggregate_events(const RawTable& events, const RawTable& labels,
                                 const std::vector<std::string>& vocabulary) {
    if (vocabulary.empty()) throw ValidationError("aggregate_events: empty vocabulary");
    const std::size_t ev_id = events.column_index("enrollment_id");
    const std::size_t ev_ts = events.column_index("timestamp");
    const std::size_t ev_action = events.column_index("action");
    const std::size_t lb_id = labels.column_index("enrollment_id");
    const std::size_t lb_label = labels.column_index("label");

    std::map<std::string, std::size_t> vocab_index;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
        if (!vocab_index.emplace(vocabulary[i], i).second)
            throw ValidationError("aggregate_events: duplicate vocabulary action '" +
                                  vocabulary[i] + "'");
    }

    std::map<std::string, std::size_t> enrollment_row;
    for (std::size_t r = 0; r < labels.rows.size(); ++r) {
        const std::string id = trim(labels.rows[r][lb_id]);
        if (!enrollment_row.emplace(id, r).second)
            throw IngestError("aggregate_events: duplicate enrollment '" + id + "' in label file");
    }

    std::vector<std::vector<std::size_t>> counts(labels.rows.size(),
                                                 std::vector<std::size_t>(vocabulary.size(), 0));
    AggregateReport report;
    report.events_total = events.rows.size();
    for (const auto& row : events.rows) {
        if (!timestamp_ok(row[ev_ts])) {
            ++report.events_rejected_timestamp;
            continue;
        }
        const auto action = vocab_index.find(trim(row[ev_action]));
        if (action == vocab_index.end()) {
            ++report.events_rejected_action;
            ++report.rejected_actions[trim(row[ev_action])];
            continue;
        }
        const auto who = enrollment_row.find(trim(row[ev_id]));
        if (who == enrollment_row.end()) {
            ++report.events_unlabeled;
            continue;
        }
        ++counts[who->second][action->second];
        ++report.events_counted;
    }

    RawTable out;
    out.columns.push_back("enrollment_id");
    for (const auto& a : vocabulary) out.columns.push_back(a);
    out.columns.push_back("label");
    for (std::size_t r = 0; r < labels.rows.size(); ++r) {
        std::vector<std::string> row;
        row.push_back(trim(labels.rows[r][lb_id]));
        for (std::size_t a = 0; a < vocabulary.size(); ++a)
            row.push_back(std::to_string(counts[r][a]));
        row.push_back(trim(labels.rows[r][lb_label]));
        out.rows.push_back(std::move(row));
    }
    return AggregateResult{std::move(out), std::move(report)};
}

std::vector<std::string> load_vocabulary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open vocabulary file '" + path + "'");
    std::vector<std::string> vocab;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        vocab.push_back(t);
    }
    if (vocab.empty()) throw IngestError("vocabulary file '" + path + "' is empty");
    return vocab;
}

void write_dataset_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    for (const auto& name : dataset.feature_names()) out << csv_escape(name) << ',';
    out << "label\n";
    char buf[40];
    for (std::size_t r = 0; r < dataset.rows(); ++r) {
        for (std::size_t c = 0; c < dataset.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", dataset.at(r, c));
            out << buf << ',';
        }
        out << dataset.label(r) << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace niafs::data
