// niafs command line: bench runs the full algorithm x classifier grid,
// select runs one feature selection, aggregate turns a clickstream event
// log into a count table, report re-renders a grid CSV.
//
// Exit codes: 0 success, 1 validation error, 2 runtime failure with at
// least one failed grid cell.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "niafs/errors.hpp"
#include "niafs/harness.hpp"
#include "niafs/threading.hpp"

namespace {

int cmd_bench(const std::string& config_path, const std::string& reference_override) {
    using namespace niafs;
    bench::RunConfig config = bench::load_config(config_path);
    if (!reference_override.empty()) config.reference = reference_override;
    config.validate();

    std::filesystem::create_directories(config.output_dir);

    // Audit copy of the post-preprocessing dataset.
    const auto ingest = data::ingest_csv(config.dataset_path, config.preprocess);
    data::write_dataset_csv(ingest.dataset, config.output_dir + "/processed_dataset.csv");
    if (ingest.report.rows_dropped > 0)
        std::cerr << "dropped " << ingest.report.rows_dropped << " rows with missing values\n";

    const auto result = bench::run_grid(config);

    const std::string grid_csv = config.output_dir + "/grid.csv";
    bench::emit_report_csv(result, grid_csv);
    bench::emit_report_markdown(result, config.output_dir + "/grid.md");
    bench::emit_details_csv(result, config.output_dir + "/repeats.csv");
    std::cout << bench::render_markdown(result);
    std::cout << "\nreports written to " << config.output_dir << "/ (grid.csv, grid.md, repeats.csv)\n";

    if (!config.reference.empty()) {
        const std::string cmp = bench::compare_to_reference(result, config.reference);
        std::cout << '\n' << cmp;
        std::ofstream out(config.output_dir + "/reference_delta.csv");
        out << cmp;
    }

    if (result.any_failed()) {
        std::cerr << "warning: at least one grid cell failed; see repeats.csv\n";
        return 2;
    }
    return 0;
}

int cmd_select(const std::string& dataset_path, const std::string& schema_path,
               const std::string& algo, const std::string& classifier, std::uint64_t seed,
               std::size_t population, std::size_t budget, double alpha, double threshold,
               const std::string& protocol) {
    using namespace niafs;
    data::PreprocessSpec spec;
    if (!schema_path.empty()) spec = data::PreprocessSpec::from_file(schema_path);
    else spec.label_column = "label";
    const auto ingest = data::ingest_csv(dataset_path, spec);
    const auto& dataset = ingest.dataset;
    if (ingest.report.rows_dropped > 0)
        std::cerr << "dropped " << ingest.report.rows_dropped << " rows with missing values\n";

    fs::FitnessSpec fitness;
    fitness.classifier = ml::ClassifierSpec::of(ml::parse_classifier(classifier));
    fitness.alpha = alpha;
    fitness.threshold = threshold;
    fitness.protocol = fs::parse_protocol(protocol);

    opt::OptimizerSpec optimizer;
    optimizer.algorithm = opt::parse_algorithm(algo);
    optimizer.population_size = population;
    optimizer.max_evaluations = budget;

    const RngStream rng(seed);
    const auto selection = fs::select_features(dataset, optimizer, fitness, rng);

    std::cout << "algorithm: " << opt::algorithm_display_name(optimizer.algorithm) << '\n';
    std::cout << "mask: " << selection.mask.bits() << '\n';
    std::cout << "selected " << selection.selected_count << " of " << dataset.cols()
              << " features:";
    for (std::size_t i : selection.mask.indices())
        std::cout << ' ' << dataset.feature_names()[i];
    std::cout << '\n';
    std::printf("wrapper fitness: %.6f\n", selection.wrapper_fitness);
    std::printf("optimizer evaluations: %zu\n", selection.optimizer_trace.evaluations_used);

    // Train/test metrics on a held-out split with the selected columns.
    auto split = data::split_train_test(dataset, 0.8, true, RngStream(seed).derive(99));
    const auto train = split.train.select_columns(selection.mask.indices());
    const auto test = split.test.select_columns(selection.mask.indices());
    const auto model = ml::fit_classifier(fitness.classifier, train, RngStream(seed).derive(98));
    const auto metrics = ml::evaluate_classifier(*model, test);
    std::printf("test accuracy: %.4f  f1: %.4f  auc: %.4f\n", metrics.accuracy, metrics.f1,
                metrics.auc);
    return 0;
}

int cmd_aggregate(const std::string& events_path, const std::string& labels_path,
                  const std::string& vocab_path, const std::string& out_path) {
    using namespace niafs;
    const auto events = data::load_csv_file(events_path);
    const auto labels = data::load_csv_file(labels_path);
    const auto vocab = data::load_vocabulary(vocab_path);
    const auto agg = data::aggregate_events(events, labels, vocab);
    data::write_csv(agg.table, out_path);

    const auto& rep = agg.report;
    std::cout << "events: " << rep.events_total << " total, " << rep.events_counted
              << " counted\n";
    if (rep.events_rejected_action > 0) {
        std::cout << "rejected (action outside vocabulary): " << rep.events_rejected_action
                  << '\n';
        for (const auto& [action, count] : rep.rejected_actions)
            std::cout << "  " << action << ": " << count << '\n';
    }
    if (rep.events_rejected_timestamp > 0)
        std::cout << "rejected (bad timestamp): " << rep.events_rejected_timestamp << '\n';
    if (rep.events_unlabeled > 0)
        std::cout << "skipped (enrollment not in label file): " << rep.events_unlabeled << '\n';
    std::cout << "wrote " << agg.table.rows.size() << " enrollment rows to " << out_path << '\n';
    return 0;
}

int cmd_report(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
    using namespace niafs;
    const auto result = bench::parse_grid_csv(in_path);
    std::string text;
    if (format == "markdown") text = bench::render_markdown(result);
    else if (format == "csv") text = bench::render_csv(result);
    else throw ValidationError("report: format must be markdown or csv");
    if (out_path.empty()) std::cout << text;
    else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nature-inspired feature selection toolkit"};
    app.require_subcommand(1);

    std::string config_path, reference_override;
    auto* bench_cmd = app.add_subcommand("bench", "run the full algorithm x classifier grid");
    bench_cmd->add_option("--config", config_path, "run config file")->required();
    bench_cmd->add_option("--reference", reference_override,
                          "compare against an embedded reference table "
                          "(xuetangx|student|multicourse)");

    std::string sel_dataset, sel_schema, sel_algo = "CuckooSearch", sel_classifier = "KNN",
                sel_protocol = "paper_faithful";
    std::uint64_t sel_seed = 0;
    std::size_t sel_population = 30, sel_budget = 15000;
    double sel_alpha = 0.99, sel_threshold = 0.5;
    auto* select_cmd = app.add_subcommand("select", "run one feature selection");
    select_cmd->add_option("--dataset", sel_dataset, "dataset csv")->required();
    select_cmd->add_option("--schema", sel_schema, "preprocess schema file");
    select_cmd->add_option("--algo", sel_algo, "algorithm name");
    select_cmd->add_option("--classifier", sel_classifier, "wrapper classifier");
    select_cmd->add_option("--seed", sel_seed, "master seed");
    select_cmd->add_option("--population", sel_population, "population size");
    select_cmd->add_option("--budget", sel_budget, "evaluation budget");
    select_cmd->add_option("--alpha", sel_alpha, "accuracy/size trade-off weight");
    select_cmd->add_option("--threshold", sel_threshold, "feature score threshold");
    select_cmd->add_option("--protocol", sel_protocol, "paper_faithful|leakage_safe");

    std::string agg_events, agg_labels, agg_vocab, agg_out;
    auto* agg_cmd = app.add_subcommand("aggregate", "aggregate a clickstream event log");
    agg_cmd->add_option("--events", agg_events, "events csv (enrollment_id,timestamp,action)")
        ->required();
    agg_cmd->add_option("--labels", agg_labels, "labels csv (enrollment_id,label)")->required();
    agg_cmd->add_option("--vocab", agg_vocab, "action vocabulary file")->required();
    agg_cmd->add_option("--out", agg_out, "output csv")->required();

    std::string rep_in, rep_format = "markdown", rep_out;
    auto* report_cmd = app.add_subcommand("report", "re-render a grid csv");
    report_cmd->add_option("--in", rep_in, "grid csv produced by bench")->required();
    report_cmd->add_option("--format", rep_format, "markdown|csv");
    report_cmd->add_option("--out", rep_out, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench_cmd->parsed()) return cmd_bench(config_path, reference_override);
        if (select_cmd->parsed())
            return cmd_select(sel_dataset, sel_schema, sel_algo, sel_classifier, sel_seed,
                              sel_population, sel_budget, sel_alpha, sel_threshold, sel_protocol);
        if (agg_cmd->parsed()) return cmd_aggregate(agg_events, agg_labels, agg_vocab, agg_out);
        if (report_cmd->parsed()) return cmd_report(rep_in, rep_format, rep_out);
    } catch (const niafs::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const niafs::IngestError& e) {
        std::cerr << "ingest error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
