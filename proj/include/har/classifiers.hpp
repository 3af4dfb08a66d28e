#pragma once

#include <cstdint>

#include "har/model.hpp"

namespace har {

// ---- Gaussian Naive Bayes ----

struct NaiveBayesModel : TrainedModel {
    struct ClassStats {
        double log_prior = 0.0;
        std::vector<double> means;
        std::vector<double> variances;  // floored, > 0
    };
    std::array<bool, kActivityCount> present{};
    std::array<ClassStats, kActivityCount> classes;

    explicit NaiveBayesModel(std::vector<std::string> names)
        : TrainedModel(ModelKind::NaiveBayes, std::move(names)) {}
    std::array<double, kActivityCount> class_scores(std::span<const double> features) const override;
    std::string hyperparams() const override;
};

std::unique_ptr<NaiveBayesModel> train_nb(const FeatureDataset& data);

// ---- Decision tree (binary splits by information gain) ----

struct TreeParams {
    int max_depth = 20;
    int min_leaf = 2;
};

struct TreeNode {
    int feature = -1;  // -1 => leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::array<std::int64_t, kActivityCount> counts{};  // training labels reaching this node
};

struct DecisionTreeModel : TrainedModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    TreeParams params;

    explicit DecisionTreeModel(std::vector<std::string> names)
        : TrainedModel(ModelKind::DecisionTree, std::move(names)) {}
    std::array<double, kActivityCount> class_scores(std::span<const double> features) const override;
    std::string hyperparams() const override;

    const TreeNode& leaf_for(std::span<const double> features) const;
};

std::unique_ptr<DecisionTreeModel> train_tree(const FeatureDataset& data, const TreeParams& params = {});

// ---- Bootstrap ensembles: random forest and bagging ----

struct ForestParams {
    int n_trees = 100;
    int m_features = 0;  // candidate features per node; 0 => ceil(sqrt(d))
    std::uint64_t seed = 0;
    bool bootstrap = true;
    TreeParams tree;
};

struct BaggingParams {
    int n_bags = 10;
    std::uint64_t seed = 0;
    bool bootstrap = true;
    TreeParams tree;
};

struct EnsembleModel : TrainedModel {
    std::vector<DecisionTreeModel> trees;
    int m_features = 0;  // d for bagging
    std::uint64_t seed = 0;
    bool bootstrap = true;

    EnsembleModel(ModelKind kind, std::vector<std::string> names)
        : TrainedModel(kind, std::move(names)) {}
    // Plurality vote fractions over member trees.
    std::array<double, kActivityCount> class_scores(std::span<const double> features) const override;
    std::string hyperparams() const override;
};

std::unique_ptr<EnsembleModel> train_forest(const FeatureDataset& data, const ForestParams& params = {});
std::unique_ptr<EnsembleModel> train_bagging(const FeatureDataset& data, const BaggingParams& params = {});

// ---- k nearest neighbors ----

struct KnnParams {
    int k = 1;
    bool standardize = true;
};

struct KnnModel : TrainedModel {
    int k = 1;
    bool standardize = true;
    std::vector<double> means;
    std::vector<double> scales;  // 1/stddev, or 0 for constant features
    std::vector<std::vector<double>> train_rows;  // standardized when enabled
    std::vector<Activity> train_labels;

    explicit KnnModel(std::vector<std::string> names) : TrainedModel(ModelKind::Knn, std::move(names)) {}
    std::array<double, kActivityCount> class_scores(std::span<const double> features) const override;
    std::string hyperparams() const override;
};

std::unique_ptr<KnnModel> train_knn(const FeatureDataset& data, const KnnParams& params = {});

}  // namespace har
