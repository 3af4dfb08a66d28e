#include <chrono>
#include <cmath>

#include "har/classifiers.hpp"
#include "har/rng.hpp"
#include "train_util.hpp"

namespace har {

void build_tree_nodes(const FeatureDataset& data, const TreeParams& params,
                      std::vector<std::size_t> rows, int m_features, Rng* rng,
                      std::vector<TreeNode>& nodes);

namespace {

std::unique_ptr<EnsembleModel> train_ensemble(const FeatureDataset& data, ModelKind kind,
                                              int n_trees, int m_features, std::uint64_t seed,
                                              bool bootstrap, const TreeParams& tree_params) {
    require_training_data(data);
    if (n_trees < 1) throw std::invalid_argument("ensemble needs at least one tree");
    const auto t0 = std::chrono::steady_clock::now();

    auto model = std::make_unique<EnsembleModel>(kind, data.feature_names);
    model->m_features = m_features;
    model->seed = seed;
    model->bootstrap = bootstrap;
    model->trees.reserve(static_cast<std::size_t>(n_trees));

    const std::size_t n = data.rows.size();
    for (int t = 0; t < n_trees; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> rows(n);
        if (bootstrap) {
            for (std::size_t i = 0; i < n; ++i) rows[i] = rng.next_below(n);
        } else {
            for (std::size_t i = 0; i < n; ++i) rows[i] = i;
        }
        DecisionTreeModel tree(data.feature_names);
        tree.params = tree_params;
        build_tree_nodes(data, tree_params, std::move(rows), m_features, &rng, tree.nodes);
        model->trees.push_back(std::move(tree));
    }

    model->set_build_time_s(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return model;
}

}  // namespace

std::array<double, kActivityCount> EnsembleModel::class_scores(std::span<const double> features) const {
    std::array<double, kActivityCount> votes{};
    for (const DecisionTreeModel& tree : trees)
        votes[static_cast<std::size_t>(activity_code(argmax_activity(tree.class_scores(features))))] += 1.0;
    for (double& v : votes) v /= static_cast<double>(trees.size());
    return votes;
}

std::string EnsembleModel::hyperparams() const {
    std::string s = (kind() == ModelKind::RandomForest ? "trees=" : "bags=") +
                    std::to_string(trees.size());
    if (kind() == ModelKind::RandomForest) s += " m=" + std::to_string(m_features);
    s += " seed=" + std::to_string(seed);
    if (!bootstrap) s += " no-bootstrap";
    return s;
}

std::unique_ptr<EnsembleModel> train_forest(const FeatureDataset& data, const ForestParams& params) {
    const int d = static_cast<int>(data.feature_names.size());
    int m = params.m_features;
    if (m <= 0) m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))));
    m = std::min(m, d);
    return train_ensemble(data, ModelKind::RandomForest, params.n_trees, m, params.seed,
                          params.bootstrap, params.tree);
}

std::unique_ptr<EnsembleModel> train_bagging(const FeatureDataset& data, const BaggingParams& params) {
    const int d = static_cast<int>(data.feature_names.size());
    return train_ensemble(data, ModelKind::Bagging, params.n_bags, d, params.seed,
                          params.bootstrap, params.tree);
}

}  // namespace har
