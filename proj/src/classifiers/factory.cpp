#include <algorithm>
#include <stdexcept>

#include "niafs/classifiers.hpp"
#include "niafs/errors.hpp"

namespace niafs::ml {

namespace detail {
int knn_predict_row(const data::Dataset& train, const double* row, std::size_t k);
double knn_score_row(const data::Dataset& train, const double* row, std::size_t k);
}

std::string classifier_id(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::KNN: return "KNN";
        case ClassifierKind::SVM: return "SVM";
        case ClassifierKind::DecisionTree: return "DecisionTree";
        case ClassifierKind::RandomForest: return "RandomForest";
        case ClassifierKind::RandomForestBalanced: return "RandomForestBalanced";
        case ClassifierKind::RandomForestBalancedSubsample: return "RandomForestBalancedSubsample";
        case ClassifierKind::MLP: return "MLP";
        case ClassifierKind::TestFail: return "TestFail";
    }
    throw ValidationError("classifier_id: unknown kind");
}

ClassifierKind parse_classifier(const std::string& name) {
    for (ClassifierKind kind :
         {ClassifierKind::KNN, ClassifierKind::SVM, ClassifierKind::DecisionTree,
          ClassifierKind::RandomForest, ClassifierKind::RandomForestBalanced,
          ClassifierKind::RandomForestBalancedSubsample, ClassifierKind::MLP}) {
        if (name == classifier_id(kind)) return kind;
    }
    if (name == "ANN") return ClassifierKind::MLP; // table column alias
    throw ValidationError("unknown classifier name: '" + name + "'");
}

const std::vector<ClassifierKind>& default_classifier_grid() {
    static const std::vector<ClassifierKind> grid = {
        ClassifierKind::SVM,
        ClassifierKind::RandomForest,
        ClassifierKind::RandomForestBalanced,
        ClassifierKind::RandomForestBalancedSubsample,
        ClassifierKind::KNN,
        ClassifierKind::DecisionTree,
        ClassifierKind::MLP,
    };
    return grid;
}

void ClassifierSpec::validate() const {
    if (knn_k < 1) throw ValidationError("ClassifierSpec.knn_k: must be >= 1");
    if (!(svm_c > 0.0)) throw ValidationError("ClassifierSpec.svm_c: must be > 0");
    if (tree_min_samples_split < 2)
        throw ValidationError("ClassifierSpec.tree_min_samples_split: must be >= 2");
    if (forest_trees < 1) throw ValidationError("ClassifierSpec.forest_trees: must be >= 1");
    if (mlp_epochs < 1) throw ValidationError("ClassifierSpec.mlp_epochs: must be >= 1");
    if (!(mlp_learning_rate > 0.0))
        throw ValidationError("ClassifierSpec.mlp_learning_rate: must be > 0");
}

ClassifierSpec ClassifierSpec::of(ClassifierKind kind) {
    ClassifierSpec spec;
    spec.kind = kind;
    return spec;
}

namespace {

class KnnClassifier final : public Classifier {
public:
    KnnClassifier(data::Dataset train, std::size_t k) : train_(std::move(train)), k_(k) {}
    int predict(const double* row) const override {
        return detail::knn_predict_row(train_, row, k_);
    }
    double score(const double* row) const override {
        return detail::knn_score_row(train_, row, k_);
    }

private:
    data::Dataset train_;
    std::size_t k_;
};

class TreeClassifier final : public Classifier {
public:
    explicit TreeClassifier(DecisionTreeModel model) : model_(std::move(model)) {}
    int predict(const double* row) const override { return model_.predict(row); }
    double score(const double* row) const override { return model_.score(row); }

private:
    DecisionTreeModel model_;
};

class ForestClassifier final : public Classifier {
public:
    explicit ForestClassifier(RandomForestModel model) : model_(std::move(model)) {}
    int predict(const double* row) const override { return model_.predict(row); }
    double score(const double* row) const override { return model_.score(row); }

private:
    RandomForestModel model_;
};

class SvmClassifier final : public Classifier {
public:
    explicit SvmClassifier(SvmModel model) : model_(std::move(model)) {}
    int predict(const double* row) const override { return model_.predict(row); }
    double score(const double* row) const override {
        return model_.constant_class >= 0 ? model_.constant_class : model_.decision(row);
    }
    bool converged() const override { return model_.convergence_flag; }

private:
    SvmModel model_;
};

class MlpClassifier final : public Classifier {
public:
    explicit MlpClassifier(MlpModel model) : model_(std::move(model)) {}
    int predict(const double* row) const override { return model_.predict(row); }
    double score(const double* row) const override { return model_.forward(row); }

private:
    MlpModel model_;
};

class FailingClassifier final : public Classifier {
public:
    int predict(const double*) const override {
        throw std::runtime_error("injected classifier failure");
    }
    double score(const double*) const override {
        throw std::runtime_error("injected classifier failure");
    }
};

} // namespace

std::unique_ptr<Classifier> fit_classifier(const ClassifierSpec& spec, const data::Dataset& train,
                                           RngStream rng) {
    spec.validate();
    if (train.rows() == 0) throw ValidationError("fit_classifier: empty training set");
    switch (spec.kind) {
        case ClassifierKind::KNN:
            // k capped at the training size so tiny folds stay usable.
            return std::make_unique<KnnClassifier>(train, std::min(spec.knn_k, train.rows()));
        case ClassifierKind::SVM:
            return std::make_unique<SvmClassifier>(
                fit_svm_smo(train, spec.svm_c, spec.svm_linear, spec.svm_gamma, spec.svm_tol,
                            spec.svm_max_passes, rng, spec.svm_sweep_cap));
        case ClassifierKind::DecisionTree:
            return std::make_unique<TreeClassifier>(
                fit_decision_tree(train, spec.tree_max_depth, spec.tree_min_samples_split));
        case ClassifierKind::RandomForest:
            return std::make_unique<ForestClassifier>(
                fit_random_forest(train, spec.forest_trees, RFMode::Neutral, rng));
        case ClassifierKind::RandomForestBalanced:
            return std::make_unique<ForestClassifier>(
                fit_random_forest(train, spec.forest_trees, RFMode::Balanced, rng));
        case ClassifierKind::RandomForestBalancedSubsample:
            return std::make_unique<ForestClassifier>(
                fit_random_forest(train, spec.forest_trees, RFMode::BalancedSubsample, rng));
        case ClassifierKind::MLP:
            return std::make_unique<MlpClassifier>(
                fit_mlp(train, spec.mlp_epochs, spec.mlp_learning_rate, rng, spec.mlp_batch));
        case ClassifierKind::TestFail:
            return std::make_unique<FailingClassifier>();
    }
    throw ValidationError("fit_classifier: unknown kind");
}

std::vector<int> predict_all(const Classifier& model, const data::Dataset& rows) {
    std::vector<int> out(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r) out[r] = model.predict(rows.row(r));
    return out;
}

std::vector<double> score_all(const Classifier& model, const data::Dataset& rows) {
    std::vector<double> out(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r) out[r] = model.score(rows.row(r));
    return out;
}

Metrics evaluate_classifier(const Classifier& model, const data::Dataset& test) {
    Metrics m;
    const auto predicted = predict_all(model, test);
    m.accuracy = metric_accuracy(predicted, test.labels());
    m.f1 = metric_f1(predicted, test.labels(), 1);
    m.confusion = confusion_matrix(predicted, test.labels());
    if (test.has_both_classes()) {
        m.auc = metric_auc(score_all(model, test), test.labels());
    } else {
        m.auc = std::numeric_limits<double>::quiet_NaN();
    }
    return m;
}

} // namespace niafs::ml
