#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "niafs/dataset.hpp"
#include "niafs/metrics.hpp"
#include "niafs/rng.hpp"

namespace niafs::ml {

enum class ClassifierKind {
    KNN,
    SVM,
    DecisionTree,
    RandomForest,
    RandomForestBalanced,
    RandomForestBalancedSubsample,
    MLP,
    // Test hook: fit succeeds, predict throws. Rejected by config parsing.
    TestFail,
};

enum class RFMode { Neutral, Balanced, BalancedSubsample };

std::string classifier_id(ClassifierKind kind);
ClassifierKind parse_classifier(const std::string& name);
const std::vector<ClassifierKind>& default_classifier_grid();

inline constexpr std::size_t kUnlimitedDepth = std::numeric_limits<std::size_t>::max();

// One classifier column of the grid: a kind plus its hyperparameters.
// Defaults mirror the common library defaults.
struct ClassifierSpec {
    ClassifierKind kind = ClassifierKind::KNN;

    std::size_t knn_k = 5;

    double svm_c = 1.0;
    double svm_gamma = 0.0; // 0 = 1 / (d * var(X))
    bool svm_linear = false;
    double svm_tol = 1e-3;
    std::size_t svm_max_passes = 10;
    std::size_t svm_sweep_cap = 500;

    std::size_t tree_max_depth = kUnlimitedDepth;
    std::size_t tree_min_samples_split = 2;

    std::size_t forest_trees = 100;

    std::size_t mlp_epochs = 500;
    double mlp_learning_rate = 0.1;
    std::size_t mlp_batch = 32;

    void validate() const;
    static ClassifierSpec of(ClassifierKind kind);
};

// Immutable trained model.
class Classifier {
public:
    virtual ~Classifier() = default;
    virtual int predict(const double* row) const = 0;
    // Monotone in confidence for class 1 (used for AUC ranking).
    virtual double score(const double* row) const = 0;
    virtual bool converged() const { return true; }
};

std::unique_ptr<Classifier> fit_classifier(const ClassifierSpec& spec, const data::Dataset& train,
                                           RngStream rng);

std::vector<int> predict_all(const Classifier& model, const data::Dataset& rows);
std::vector<double> score_all(const Classifier& model, const data::Dataset& rows);

// Accuracy/F1/AUC/confusion of a model over a labeled set.
Metrics evaluate_classifier(const Classifier& model, const data::Dataset& test);

// ---- K-nearest neighbours -----------------------------------------------

// Majority label among the k nearest training rows (Euclidean); ties by
// smaller summed distance, then lower label.
int knn_classify(const data::Dataset& train, const std::vector<double>& test_row, std::size_t k);

// ---- CART decision tree --------------------------------------------------

double gini_impurity(const std::vector<int>& labels);

struct SplitResult {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double gain = 0.0;
};

// Exhaustive scan over midpoint thresholds, maximizing Gini decrease;
// ties go to the lowest feature index, then the lowest threshold.
SplitResult best_split(const data::Dataset& train,
                       const std::vector<std::size_t>& feature_subset = {});

struct TreeNode {
    int feature = -1; // -1 = leaf
    double threshold = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    int label = 0;
    double p1 = 0.0; // class-1 share at the node
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;
    int predict(const double* row) const;
    double score(const double* row) const;
    std::size_t leaf_count() const;
    std::size_t split_count() const;
};

DecisionTreeModel fit_decision_tree(const data::Dataset& train,
                                    std::size_t max_depth = kUnlimitedDepth,
                                    std::size_t min_samples_split = 2);

// ---- random forest ---------------------------------------------------------

struct RandomForestModel {
    std::vector<DecisionTreeModel> trees;
    RFMode mode = RFMode::Neutral;
    int predict(const double* row) const; // majority vote, ties -> 0
    double score(const double* row) const;
};

// Bootstrap per tree (class-balanced draw under BalancedSubsample),
// sqrt(d) feature candidates per split, class weights applied to the
// Gini computation per mode.
RandomForestModel fit_random_forest(const data::Dataset& train, std::size_t n_trees, RFMode mode,
                                    RngStream rng);

// ---- SVM (simplified SMO) --------------------------------------------------

struct SvmModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> dual_coef; // alpha_i * y_i
    double bias = 0.0;
    bool linear = false;
    double gamma = 1.0;
    bool convergence_flag = true;
    int constant_class = -1; // >= 0 when trained on single-class data

    double decision(const double* row) const;
    int predict(const double* row) const;
};

SvmModel fit_svm_smo(const data::Dataset& train, double C, bool linear, double gamma, double tol,
                     std::size_t max_passes, RngStream rng, std::size_t sweep_cap = 500);

// ---- MLP: input -> 6 sigmoid -> 6 sigmoid -> 1 sigmoid ----------------------

struct MlpModel {
    // weights[l] has shape (out x (in + 1)); the last column is the bias.
    std::vector<std::vector<double>> weights;
    std::vector<std::size_t> layer_sizes;

    double forward(const double* row) const; // class-1 probability
    int predict(const double* row) const { return forward(row) >= 0.5 ? 1 : 0; }
};

MlpModel fit_mlp(const data::Dataset& train, std::size_t epochs, double learning_rate,
                 RngStream rng, std::size_t batch_size = 32);

// Mean cross-entropy over the rows (used by training and by the
// finite-difference gradient check).
double mlp_loss(const MlpModel& model, const data::Dataset& rows,
                const std::vector<std::size_t>& batch);
// Gradients shaped like model.weights.
std::vector<std::vector<double>> mlp_gradients(const MlpModel& model, const data::Dataset& rows,
                                               const std::vector<std::size_t>& batch);

} // namespace niafs::ml
