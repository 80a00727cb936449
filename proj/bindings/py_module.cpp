// Python bindings for the niafs core: optimizers, feature selection,
// classifiers, metrics, and the grid harness.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "niafs/errors.hpp"
#include "niafs/feature_selection.hpp"
#include "niafs/harness.hpp"

namespace py = pybind11;
using namespace niafs;

namespace {

data::Dataset dataset_from_rows(const std::vector<std::vector<double>>& X,
                                const std::vector<int>& y,
                                std::vector<std::string> names) {
    if (X.size() != y.size()) throw ValidationError("X and y must have the same length");
    const std::size_t n = X.size();
    const std::size_t d = n > 0 ? X[0].size() : 0;
    if (n == 0 || d == 0) throw ValidationError("X must be a non-empty 2-d list");
    std::vector<double> flat;
    flat.reserve(n * d);
    for (const auto& row : X) {
        if (row.size() != d) throw ValidationError("ragged rows in X");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    if (names.empty())
        for (std::size_t i = 0; i < d; ++i) names.push_back("f" + std::to_string(i));
    return data::Dataset::make(std::move(flat), y, std::move(names));
}

py::dict optimize_result_dict(const opt::OptimizeResult& r) {
    py::dict out;
    out["best_position"] = r.best_position;
    out["best_fitness"] = r.best_fitness;
    out["evaluations_used"] = r.evaluations_used;
    return out;
}

} // namespace

PYBIND11_MODULE(_niafs, m) {
    m.doc() = "nature-inspired feature selection toolkit";

    py::register_exception<ValidationError>(m, "NiafsValidationError", PyExc_ValueError);
    py::register_exception<IngestError>(m, "NiafsIngestError", PyExc_ValueError);

    m.def("algorithms", [] {
        std::vector<std::string> out;
        for (auto a : opt::all_algorithms()) out.push_back(opt::algorithm_id(a));
        return out;
    });
    m.def("classifiers", [] {
        std::vector<std::string> out;
        for (auto c : ml::default_classifier_grid()) out.push_back(ml::classifier_id(c));
        return out;
    });

    m.def(
        "minimize",
        [](const std::function<double(std::vector<double>)>& objective,
           const std::vector<double>& lower, const std::vector<double>& upper,
           const std::string& algorithm, std::size_t population, std::size_t max_evaluations,
           std::uint64_t seed, const std::map<std::string, double>& params) {
            opt::SearchSpace space;
            space.dimension = lower.size();
            space.lower = lower;
            space.upper = upper;
            space.validate();
            opt::Objective obj;
            obj.name = "python";
            obj.dimension = space.dimension;
            obj.evaluate = [&objective](const std::vector<double>& x) { return objective(x); };
            opt::OptimizerSpec spec;
            spec.algorithm = opt::parse_algorithm(algorithm);
            spec.population_size = population;
            spec.max_evaluations = max_evaluations;
            spec.params = params;
            return optimize_result_dict(opt::run_optimizer(obj, space, spec, RngStream(seed)));
        },
        py::arg("objective"), py::arg("lower"), py::arg("upper"), py::arg("algorithm") = "PSO",
        py::arg("population") = 30, py::arg("max_evaluations") = 15000, py::arg("seed") = 0,
        py::arg("params") = std::map<std::string, double>{},
        "Minimize a callable over a box; returns best position/fitness.");

    m.def(
        "minimize_builtin",
        [](const std::string& name, std::size_t dimension, const std::string& algorithm,
           std::size_t population, std::size_t max_evaluations, std::uint64_t seed) {
            const auto [obj, space] = opt::builtin_objective(name, dimension);
            opt::OptimizerSpec spec;
            spec.algorithm = opt::parse_algorithm(algorithm);
            spec.population_size = population;
            spec.max_evaluations = max_evaluations;
            return optimize_result_dict(opt::run_optimizer(obj, space, spec, RngStream(seed)));
        },
        py::arg("name"), py::arg("dimension"), py::arg("algorithm") = "PSO",
        py::arg("population") = 30, py::arg("max_evaluations") = 15000, py::arg("seed") = 0,
        "Minimize a built-in benchmark (sphere, rastrigin, rosenbrock, ackley).");

    m.def(
        "select_features",
        [](const std::vector<std::vector<double>>& X, const std::vector<int>& y,
           const std::string& algorithm, const std::string& classifier, std::uint64_t seed,
           double alpha, double threshold, const std::string& protocol, std::size_t population,
           std::size_t max_evaluations) {
            const auto dataset = dataset_from_rows(X, y, {});
            fs::FitnessSpec fitness;
            fitness.classifier = ml::ClassifierSpec::of(ml::parse_classifier(classifier));
            fitness.alpha = alpha;
            fitness.threshold = threshold;
            fitness.protocol = fs::parse_protocol(protocol);
            opt::OptimizerSpec spec;
            spec.algorithm = opt::parse_algorithm(algorithm);
            spec.population_size = population;
            spec.max_evaluations = max_evaluations;
            const auto sel = fs::select_features(dataset, spec, fitness, RngStream(seed));
            py::dict out;
            out["mask"] = std::vector<bool>(sel.mask.included.begin(), sel.mask.included.end());
            out["selected"] = sel.mask.indices();
            out["count"] = sel.selected_count;
            out["fitness"] = sel.wrapper_fitness;
            return out;
        },
        py::arg("X"), py::arg("y"), py::arg("algorithm") = "CuckooSearch",
        py::arg("classifier") = "KNN", py::arg("seed") = 0, py::arg("alpha") = 0.99,
        py::arg("threshold") = 0.5, py::arg("protocol") = "paper_faithful",
        py::arg("population") = 20, py::arg("max_evaluations") = 2000,
        "Wrapper feature selection over [0,1]^d; returns the chosen mask.");

    py::class_<ml::Classifier, std::shared_ptr<ml::Classifier>>(m, "Model")
        .def("predict",
             [](const ml::Classifier& self, const std::vector<std::vector<double>>& X) {
                 std::vector<int> out;
                 out.reserve(X.size());
                 for (const auto& row : X) out.push_back(self.predict(row.data()));
                 return out;
             })
        .def("score",
             [](const ml::Classifier& self, const std::vector<std::vector<double>>& X) {
                 std::vector<double> out;
                 out.reserve(X.size());
                 for (const auto& row : X) out.push_back(self.score(row.data()));
                 return out;
             });

    m.def(
        "fit",
        [](const std::string& classifier, const std::vector<std::vector<double>>& X,
           const std::vector<int>& y, std::uint64_t seed) {
            const auto dataset = dataset_from_rows(X, y, {});
            auto spec = ml::ClassifierSpec::of(ml::parse_classifier(classifier));
            std::shared_ptr<ml::Classifier> model =
                ml::fit_classifier(spec, dataset, RngStream(seed));
            return model;
        },
        py::arg("classifier"), py::arg("X"), py::arg("y"), py::arg("seed") = 0,
        "Train one classifier; returns a Model with predict/score.");

    m.def("accuracy", &ml::metric_accuracy, py::arg("predicted"), py::arg("actual"));
    m.def("f1", &ml::metric_f1, py::arg("predicted"), py::arg("actual"),
          py::arg("positive_label") = 1);
    m.def("auc", &ml::metric_auc, py::arg("scores"), py::arg("actual"));

    m.def(
        "run_grid",
        [](const std::string& config_path) {
            const auto config = bench::load_config(config_path);
            const auto result = bench::run_grid(config);
            py::dict out;
            out["csv"] = bench::render_csv(result);
            out["markdown"] = bench::render_markdown(result);
            out["any_failed"] = result.any_failed();
            return out;
        },
        py::arg("config_path"), "Run the bench grid from a config file; returns the reports.");
}
