#include "niafs/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "niafs/errors.hpp"
#include "niafs/threading.hpp"

namespace niafs::bench {

namespace {

// Stream labels for the per-cell rng derivation tree.
constexpr std::uint64_t kSplitStream = 10;
constexpr std::uint64_t kSelectStream = 11;
constexpr std::uint64_t kClassifierStream = 12;
constexpr std::uint64_t kBaselineLabel = 1000;

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_3dp(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::size_t modal_count(std::vector<std::size_t> counts) {
    std::map<std::size_t, std::size_t> freq;
    for (std::size_t c : counts) ++freq[c];
    std::size_t best = counts.empty() ? 0 : counts[0];
    std::size_t best_freq = 0;
    for (const auto& [value, f] : freq) {
        if (f > best_freq) { // map order makes ties resolve to the smallest value
            best_freq = f;
            best = value;
        }
    }
    return best;
}

} // namespace

void RunConfig::validate() const {
    if (dataset_path.empty()) throw ValidationError("RunConfig.dataset: path required");
    if (algorithms.empty()) throw ValidationError("RunConfig.algorithms: list must be non-empty");
    if (classifiers.empty()) throw ValidationError("RunConfig.classifiers: list must be non-empty");
    if (repeats < 1) throw ValidationError("RunConfig.repeats: must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("RunConfig.alpha: must lie in (0, 1]");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ValidationError("RunConfig.threshold: must lie in (0, 1)");
    if (population < 2) throw ValidationError("RunConfig.population: must be >= 2");
    if (max_evaluations < population)
        throw ValidationError("RunConfig.max_evaluations: must be >= population");
    wrapper.validate();
    classifier_params.validate();
    if (!reference.empty() && find_reference_table(reference) == nullptr)
        throw ValidationError("RunConfig.reference: unknown reference table '" + reference + "'");
}

RunConfig load_config(const std::string& path) {
    const Config cfg = Config::parse_file(path);

    static const std::set<std::string> run_keys = {
        "dataset",  "schema",    "algorithms", "classifiers", "repeats",
        "master_seed", "threshold", "alpha",   "protocol",    "inner_folds",
        "output_dir",  "reference"};
    static const std::set<std::string> optimizer_keys = {"population", "max_evaluations"};
    static const std::set<std::string> wrapper_keys = {"classifier", "knn_k"};
    static const std::set<std::string> classifier_keys = {
        "knn_k",        "svm_c",      "svm_gamma",  "svm_linear",
        "tree_max_depth", "tree_min_samples_split", "forest_trees", "mlp_epochs",
        "mlp_learning_rate", "mlp_batch"};

    for (const auto& section : cfg.section_names()) {
        const std::set<std::string>* allowed = nullptr;
        if (section == "run") allowed = &run_keys;
        else if (section == "optimizer") allowed = &optimizer_keys;
        else if (section == "wrapper") allowed = &wrapper_keys;
        else if (section == "classifiers") allowed = &classifier_keys;
        else throw ValidationError("config: unknown section [" + section + "]");
        for (const auto& key : cfg.keys(section))
            if (!allowed->count(key))
                throw ValidationError("config: unknown key '" + key + "' in section [" + section +
                                      "]");
    }

    RunConfig rc;
    rc.dataset_path = cfg.get("run", "dataset");
    rc.schema_path = cfg.get_or("run", "schema", "");
    if (!rc.schema_path.empty()) rc.preprocess = data::PreprocessSpec::from_file(rc.schema_path);
    else {
        // Minimal default: last column named "label", already binary.
        rc.preprocess.label_column = "label";
    }

    if (cfg.has("run", "algorithms")) {
        rc.algorithms.clear();
        for (const auto& name : cfg.get_list("run", "algorithms"))
            rc.algorithms.push_back(opt::parse_algorithm(name));
    }
    if (cfg.has("run", "classifiers")) {
        rc.classifiers.clear();
        for (const auto& name : cfg.get_list("run", "classifiers"))
            rc.classifiers.push_back(ml::parse_classifier(name));
    }
    rc.repeats = static_cast<std::size_t>(cfg.get_int_or("run", "repeats", 10));
    if (cfg.has("run", "repeats") && cfg.get_int("run", "repeats") < 1)
        throw ValidationError("config: repeats must be >= 1");
    rc.master_seed = cfg.get_uint64_or("run", "master_seed", 42);
    rc.threshold = cfg.get_double_or("run", "threshold", 0.5);
    rc.alpha = cfg.get_double_or("run", "alpha", 0.99);
    rc.protocol = fs::parse_protocol(cfg.get_or("run", "protocol", "paper_faithful"));
    rc.inner_folds = static_cast<std::size_t>(cfg.get_int_or("run", "inner_folds", 3));
    rc.output_dir = cfg.get_or("run", "output_dir", "out");
    rc.reference = cfg.get_or("run", "reference", "");

    rc.population = static_cast<std::size_t>(cfg.get_int_or("optimizer", "population", 30));
    rc.max_evaluations =
        static_cast<std::size_t>(cfg.get_int_or("optimizer", "max_evaluations", 15000));

    rc.wrapper = ml::ClassifierSpec::of(
        ml::parse_classifier(cfg.get_or("wrapper", "classifier", "KNN")));
    rc.wrapper.knn_k = static_cast<std::size_t>(cfg.get_int_or("wrapper", "knn_k", 5));

    auto& cp = rc.classifier_params;
    cp.knn_k = static_cast<std::size_t>(cfg.get_int_or("classifiers", "knn_k", 5));
    cp.svm_c = cfg.get_double_or("classifiers", "svm_c", 1.0);
    cp.svm_gamma = cfg.get_double_or("classifiers", "svm_gamma", 0.0);
    cp.svm_linear = cfg.get_bool_or("classifiers", "svm_linear", false);
    if (cfg.has("classifiers", "tree_max_depth"))
        cp.tree_max_depth = static_cast<std::size_t>(cfg.get_int("classifiers", "tree_max_depth"));
    cp.tree_min_samples_split =
        static_cast<std::size_t>(cfg.get_int_or("classifiers", "tree_min_samples_split", 2));
    cp.forest_trees = static_cast<std::size_t>(cfg.get_int_or("classifiers", "forest_trees", 100));
    cp.mlp_epochs = static_cast<std::size_t>(cfg.get_int_or("classifiers", "mlp_epochs", 500));
    cp.mlp_learning_rate = cfg.get_double_or("classifiers", "mlp_learning_rate", 0.1);
    cp.mlp_batch = static_cast<std::size_t>(cfg.get_int_or("classifiers", "mlp_batch", 32));

    rc.validate();
    return rc;
}

bool GridResult::any_failed() const {
    for (const auto& row : rows)
        for (const auto& cell : row.cells)
            if (cell.failed) return true;
    return false;
}

const GridRow* GridResult::find_row(const std::string& algorithm) const {
    for (const auto& row : rows)
        if (row.algorithm == algorithm) return &row;
    return nullptr;
}

namespace {

struct ClassifierOutcome {
    bool failed = false;
    std::string error;
    double accuracy = 0.0, f1 = 0.0, auc = 0.0;
};

struct TaskOutcome {
    bool selection_failed = false;
    std::string selection_error;
    std::string mask_bits;
    std::size_t feature_count = 0;
    std::vector<ClassifierOutcome> per_classifier;
};

ml::ClassifierSpec grid_spec(const RunConfig& config, ml::ClassifierKind kind) {
    ml::ClassifierSpec spec = config.classifier_params;
    spec.kind = kind;
    return spec;
}

ClassifierOutcome evaluate_cell(const RunConfig& config, ml::ClassifierKind kind,
                                const data::Dataset& train, const data::Dataset& test,
                                RngStream rng) {
    ClassifierOutcome out;
    try {
        const auto model = ml::fit_classifier(grid_spec(config, kind), train, std::move(rng));
        const auto metrics = ml::evaluate_classifier(*model, test);
        out.accuracy = metrics.accuracy;
        out.f1 = metrics.f1;
        out.auc = metrics.auc;
    } catch (const std::exception& e) {
        out.failed = true;
        out.error = e.what();
    }
    return out;
}

} // namespace

GridResult run_grid(const RunConfig& config) {
    config.validate();
    const auto ingest = data::ingest_csv(config.dataset_path, config.preprocess);
    const data::Dataset& full = ingest.dataset;
    if (!full.has_both_classes())
        throw ValidationError("run_grid: dataset must contain both classes");
    const std::size_t d = full.cols();
    const RngStream root(config.master_seed);

    fs::FitnessSpec fitness;
    fitness.classifier = config.wrapper;
    fitness.alpha = config.alpha;
    fitness.protocol = config.protocol;
    fitness.inner_folds = config.inner_folds;
    fitness.threshold = config.threshold;

    opt::OptimizerSpec optimizer_template;
    optimizer_template.population_size = config.population;
    optimizer_template.max_evaluations = config.max_evaluations;

    // Outer 4:1 splits, one per repeat, shared by every algorithm so rows
    // are comparable within a repeat.
    struct RepeatData {
        data::Dataset train;
        data::Dataset test;
    };
    std::vector<RepeatData> repeats;
    repeats.reserve(config.repeats);
    for (std::size_t r = 0; r < config.repeats; ++r) {
        auto split_rng = root.derive(kSplitStream).derive(r);
        auto split = data::split_train_test(full, 0.8, true, std::move(split_rng));
        if (config.protocol == fs::Protocol::LeakageSafe) {
            // Leakage-safe runs refit the scaler on the training partition.
            auto scaled = data::scale_features(split.train, split.test);
            repeats.push_back({std::move(scaled.train), std::move(scaled.test)});
        } else {
            repeats.push_back({std::move(split.train), std::move(split.test)});
        }
    }

    // One task per (algorithm, repeat), plus one baseline task per repeat.
    struct Task {
        std::size_t algo_index; // == config.algorithms.size() for baseline
        std::size_t repeat;
    };
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < config.algorithms.size(); ++a)
        for (std::size_t r = 0; r < config.repeats; ++r) tasks.push_back({a, r});
    for (std::size_t r = 0; r < config.repeats; ++r)
        tasks.push_back({config.algorithms.size(), r});

    std::vector<TaskOutcome> outcomes(tasks.size());
    parallel_for(tasks.size(), worker_count(), [&](std::size_t t) {
        const Task& task = tasks[t];
        TaskOutcome& out = outcomes[t];
        out.per_classifier.resize(config.classifiers.size());
        const RepeatData& rd = repeats[task.repeat];
        const bool baseline = task.algo_index == config.algorithms.size();

        std::vector<std::size_t> columns;
        if (baseline) {
            out.feature_count = d;
            columns.resize(d);
            for (std::size_t i = 0; i < d; ++i) columns[i] = i;
            out.mask_bits.assign(d, '1');
        } else {
            try {
                opt::OptimizerSpec spec = optimizer_template;
                spec.algorithm = config.algorithms[task.algo_index];
                const RngStream select_rng =
                    root.derive(kSelectStream).derive(task.algo_index).derive(task.repeat);
                const data::Dataset& selection_data =
                    config.protocol == fs::Protocol::LeakageSafe ? rd.train : full;
                const auto selection =
                    fs::select_features(selection_data, spec, fitness, select_rng);
                out.mask_bits = selection.mask.bits();
                out.feature_count = selection.selected_count;
                columns = selection.mask.indices();
            } catch (const std::exception& e) {
                out.selection_failed = true;
                out.selection_error = e.what();
                return;
            }
        }

        const auto train = rd.train.select_columns(columns);
        const auto test = rd.test.select_columns(columns);
        const std::uint64_t algo_label = baseline ? kBaselineLabel : task.algo_index;
        for (std::size_t c = 0; c < config.classifiers.size(); ++c) {
            auto clf_rng =
                root.derive(kClassifierStream).derive(algo_label).derive(c).derive(task.repeat);
            out.per_classifier[c] = evaluate_cell(config, config.classifiers[c], train, test,
                                                  std::move(clf_rng));
        }
    });

    // Deterministic aggregation in (algorithm, classifier, repeat) order.
    GridResult result;
    for (ml::ClassifierKind kind : config.classifiers)
        result.classifier_names.push_back(ml::classifier_id(kind));

    auto outcome_of = [&](std::size_t algo_index, std::size_t repeat) -> const TaskOutcome& {
        if (algo_index == config.algorithms.size())
            return outcomes[config.algorithms.size() * config.repeats + repeat];
        return outcomes[algo_index * config.repeats + repeat];
    };

    for (std::size_t a = 0; a <= config.algorithms.size(); ++a) {
        const bool baseline = a == config.algorithms.size();
        GridRow row;
        row.algorithm = baseline ? "Baseline"
                                 : opt::algorithm_display_name(config.algorithms[a]);

        std::vector<std::size_t> counts;
        for (std::size_t r = 0; r < config.repeats; ++r) {
            const TaskOutcome& out = outcome_of(a, r);
            if (!out.selection_failed) counts.push_back(out.feature_count);
        }
        row.feature_count = baseline ? d : modal_count(counts);

        for (std::size_t c = 0; c < config.classifiers.size(); ++c) {
            CellStats cell;
            std::vector<double> accs;
            double f1_sum = 0.0, auc_sum = 0.0;
            std::size_t auc_n = 0;
            for (std::size_t r = 0; r < config.repeats; ++r) {
                const TaskOutcome& out = outcome_of(a, r);
                RepeatDetail detail;
                detail.algorithm = row.algorithm;
                detail.classifier = result.classifier_names[c];
                detail.repeat = r;
                detail.mask_bits = out.mask_bits;
                detail.feature_count = out.feature_count;
                if (out.selection_failed) {
                    detail.failed = true;
                    detail.error = out.selection_error;
                    cell.failed = true;
                    if (cell.error.empty()) cell.error = out.selection_error;
                } else {
                    const ClassifierOutcome& co = out.per_classifier[c];
                    detail.failed = co.failed;
                    detail.error = co.error;
                    detail.accuracy = co.accuracy;
                    detail.f1 = co.f1;
                    detail.auc = co.auc;
                    if (co.failed) {
                        cell.failed = true;
                        if (cell.error.empty()) cell.error = co.error;
                    } else {
                        accs.push_back(co.accuracy);
                        f1_sum += co.f1;
                        if (!std::isnan(co.auc)) {
                            auc_sum += co.auc;
                            ++auc_n;
                        }
                    }
                }
                result.details.push_back(std::move(detail));
            }
            if (!cell.failed && !accs.empty()) {
                double mean = 0.0;
                for (double v : accs) mean += v;
                mean /= static_cast<double>(accs.size());
                double var = 0.0;
                for (double v : accs) var += (v - mean) * (v - mean);
                var /= static_cast<double>(accs.size()); // population std; 0 when repeats == 1
                cell.mean_accuracy = mean;
                cell.std_accuracy = std::sqrt(var);
                cell.mean_f1 = f1_sum / static_cast<double>(accs.size());
                cell.mean_auc = auc_n > 0 ? auc_sum / static_cast<double>(auc_n)
                                          : std::numeric_limits<double>::quiet_NaN();
            }
            row.cells.push_back(std::move(cell));
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string render_csv(const GridResult& result) {
    std::ostringstream out;
    out << "algorithm,features";
    for (const auto& name : result.classifier_names) out << ',' << name << "_mean," << name << "_std";
    out << '\n';
    for (const auto& row : result.rows) {
        out << row.algorithm << ',' << row.feature_count;
        for (const auto& cell : row.cells) {
            if (cell.failed) out << ",FAIL,FAIL";
            else out << ',' << format_full(cell.mean_accuracy) << ',' << format_full(cell.std_accuracy);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_markdown(const GridResult& result) {
    std::ostringstream out;
    out << "| Algorithm | Features |";
    for (const auto& name : result.classifier_names) out << ' ' << name << " |";
    out << "\n|---|---|";
    for (std::size_t i = 0; i < result.classifier_names.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : result.rows) {
        out << "| " << row.algorithm << " | " << row.feature_count << " |";
        for (const auto& cell : row.cells) {
            if (cell.failed) out << " FAIL |";
            else
                out << ' ' << format_3dp(cell.mean_accuracy) << "±"
                    << format_3dp(cell.std_accuracy) << " |";
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace

void emit_report_csv(const GridResult& result, const std::string& path) {
    write_text(render_csv(result), path);
}

void emit_report_markdown(const GridResult& result, const std::string& path) {
    write_text(render_markdown(result), path);
}

void emit_details_csv(const GridResult& result, const std::string& path) {
    std::ostringstream out;
    out << "algorithm,classifier,repeat,feature_count,mask,accuracy,f1,auc,failed,error\n";
    for (const auto& dt : result.details) {
        out << dt.algorithm << ',' << dt.classifier << ',' << dt.repeat << ','
            << dt.feature_count << ',' << dt.mask_bits << ',' << format_full(dt.accuracy) << ','
            << format_full(dt.f1) << ',' << format_full(dt.auc) << ',' << (dt.failed ? 1 : 0)
            << ',' << '"' << dt.error << '"' << '\n';
    }
    write_text(out.str(), path);
}

GridResult parse_grid_csv_text(const std::string& text) {
    const auto table = data::parse_csv(text, ',');
    if (table.columns.size() < 2 || table.columns[0] != "algorithm" ||
        table.columns[1] != "features")
        throw IngestError("grid csv: unexpected header");
    GridResult result;
    for (std::size_t c = 2; c + 1 < table.columns.size(); c += 2) {
        const std::string& mean_col = table.columns[c];
        if (mean_col.size() < 5 || mean_col.substr(mean_col.size() - 5) != "_mean")
            throw IngestError("grid csv: expected *_mean column, got '" + mean_col + "'");
        result.classifier_names.push_back(mean_col.substr(0, mean_col.size() - 5));
    }
    for (const auto& raw : table.rows) {
        GridRow row;
        row.algorithm = raw[0];
        row.feature_count = static_cast<std::size_t>(std::stoull(raw[1]));
        for (std::size_t c = 2; c + 1 < raw.size(); c += 2) {
            CellStats cell;
            if (raw[c] == "FAIL") {
                cell.failed = true;
            } else {
                cell.mean_accuracy = std::strtod(raw[c].c_str(), nullptr);
                cell.std_accuracy = std::strtod(raw[c + 1].c_str(), nullptr);
            }
            row.cells.push_back(cell);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

GridResult parse_grid_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid_csv_text(buf.str());
}

std::string compare_to_reference(const GridResult& result, const std::string& dataset) {
    std::ostringstream out;
    const ReferenceTable* table = find_reference_table(dataset);
    if (table == nullptr) {
        out << "no reference table for dataset '" << dataset << "'\n";
        return out.str();
    }

    // Our grid column ids -> the published column names.
    const std::map<std::string, std::string> column_map = {
        {"SVM", "SVM"},
        {"RandomForest", "Random Forests"},
        {"KNN", "KNN"},
        {"DecisionTree", "Dtree"},
        {"MLP", "ANN"},
    };

    out << "reference comparison: " << dataset << "\n";
    out << "algorithm,classifier,measured,paper,delta,within_0.02\n";
    for (const auto& row : result.rows) {
        // CuckooSearch appears twice in two source tables; match both rows.
        std::vector<const ReferenceRow*> matches;
        for (const auto& ref : table->rows) {
            if (ref.label == row.algorithm || ref.label == row.algorithm + "-a" ||
                ref.label == row.algorithm + "-b")
                matches.push_back(&ref);
        }
        for (const ReferenceRow* ref : matches) {
            for (std::size_t c = 0; c < result.classifier_names.size(); ++c) {
                auto mapped = column_map.find(result.classifier_names[c]);
                if (mapped == column_map.end()) continue;
                auto col_it = std::find(table->classifier_columns.begin(),
                                        table->classifier_columns.end(), mapped->second);
                if (col_it == table->classifier_columns.end()) continue;
                const auto col =
                    static_cast<std::size_t>(col_it - table->classifier_columns.begin());
                if (row.cells[c].failed) continue;
                const double measured = row.cells[c].mean_accuracy;
                const double paper = ref->values[col];
                const double delta = measured - paper;
                out << ref->label << ',' << result.classifier_names[c] << ','
                    << format_3dp(measured) << ',' << format_3dp(paper) << ','
                    << format_3dp(delta) << ',' << (std::fabs(delta) <= 0.02 ? "yes" : "no");
                if (!ref->anomaly.empty() && col < ref->anomaly.size() && ref->anomaly[col])
                    out << " (reference value flagged as transcription anomaly)";
                out << '\n';
            }
        }
    }

    // Which algorithm tops the most classifier columns.
    std::map<std::string, std::size_t> wins;
    for (std::size_t c = 0; c < result.classifier_names.size(); ++c) {
        const GridRow* best = nullptr;
        for (const auto& row : result.rows) {
            if (row.algorithm == "Baseline" || row.cells[c].failed) continue;
            if (best == nullptr || row.cells[c].mean_accuracy > best->cells[c].mean_accuracy)
                best = &row;
        }
        if (best != nullptr) ++wins[best->algorithm];
    }
    if (!wins.empty()) {
        auto top = wins.begin();
        for (auto it = wins.begin(); it != wins.end(); ++it)
            if (it->second > top->second) top = it;
        out << "most frequent best performer: " << top->first << " (" << top->second << " of "
            << result.classifier_names.size() << " columns)\n";
    }
    return out.str();
}

} // namespace niafs::bench
