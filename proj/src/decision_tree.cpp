#include <algorithm>
#include <chrono>

#include "har/classifiers.hpp"
#include "har/info_gain.hpp"
#include "har/rng.hpp"
#include "train_util.hpp"

namespace har {
namespace {

// Guards against float noise around a mathematically zero gain.
constexpr double kMinGain = 1e-12;

struct TreeBuilder {
    const FeatureDataset& data;
    const TreeParams& params;
    int m_features;  // candidate features per node; d when not subsampling
    Rng* rng;        // nullptr => consider all features in index order
    std::vector<TreeNode>& nodes;

    std::vector<int> candidate_features() {
        const int d = static_cast<int>(data.feature_names.size());
        if (!rng || m_features >= d) {
            std::vector<int> all(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) all[static_cast<std::size_t>(i)] = i;
            return all;
        }
        // Partial Fisher-Yates draw of m distinct indices, then sorted so
        // the tie-break below stays by ascending feature index.
        std::vector<int> pool(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) pool[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < m_features; ++i) {
            const auto j = i + static_cast<int>(rng->next_below(static_cast<std::uint64_t>(d - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        pool.resize(static_cast<std::size_t>(m_features));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    int build(std::vector<std::size_t>& rows, int depth) {
        const int node_idx = static_cast<int>(nodes.size());
        nodes.emplace_back();
        auto& counts = nodes[static_cast<std::size_t>(node_idx)].counts;
        for (std::size_t r : rows) counts[static_cast<std::size_t>(activity_code(data.labels[r]))]++;

        const bool pure = std::count_if(counts.begin(), counts.end(),
                                        [](std::int64_t c) { return c > 0; }) <= 1;
        if (pure || depth >= params.max_depth ||
            rows.size() < 2 * static_cast<std::size_t>(params.min_leaf))
            return node_idx;

        int best_feature = -1;
        double best_threshold = 0.0;
        double best_gain = kMinGain;
        std::vector<double> values(rows.size());
        std::vector<Activity> labels(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) labels[i] = data.labels[rows[i]];
        for (int f : candidate_features()) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                values[i] = data.rows[rows[i]][static_cast<std::size_t>(f)];
            const ThresholdSplit split = best_threshold_split(values, labels, params.min_leaf);
            if (split.gain > best_gain) {
                best_gain = split.gain;
                best_feature = f;
                best_threshold = split.threshold;
            }
        }
        if (best_feature < 0) return node_idx;

        std::vector<std::size_t> left_rows, right_rows;
        for (std::size_t r : rows)
            (data.rows[r][static_cast<std::size_t>(best_feature)] <= best_threshold ? left_rows
                                                                                    : right_rows)
                .push_back(r);
        rows.clear();
        rows.shrink_to_fit();

        const int left = build(left_rows, depth + 1);
        const int right = build(right_rows, depth + 1);
        TreeNode& node = nodes[static_cast<std::size_t>(node_idx)];
        node.feature = best_feature;
        node.threshold = best_threshold;
        node.left = left;
        node.right = right;
        return node_idx;
    }
};

}  // namespace

const TreeNode& DecisionTreeModel::leaf_for(std::span<const double> features) const {
    const TreeNode* node = &nodes.front();
    while (node->feature >= 0)
        node = &nodes[static_cast<std::size_t>(
            features[static_cast<std::size_t>(node->feature)] <= node->threshold ? node->left
                                                                                 : node->right)];
    return *node;
}

std::array<double, kActivityCount> DecisionTreeModel::class_scores(std::span<const double> features) const {
    const TreeNode& leaf = leaf_for(features);
    std::int64_t total = 0;
    for (std::int64_t c : leaf.counts) total += c;
    std::array<double, kActivityCount> scores{};
    for (int c = 0; c < kActivityCount; ++c)
        scores[static_cast<std::size_t>(c)] =
            static_cast<double>(leaf.counts[static_cast<std::size_t>(c)]) / static_cast<double>(total);
    return scores;
}

std::string DecisionTreeModel::hyperparams() const {
    return "max_depth=" + std::to_string(params.max_depth) +
           " min_leaf=" + std::to_string(params.min_leaf);
}

// Builds one tree over the given row multiset; shared with the ensembles.
void build_tree_nodes(const FeatureDataset& data, const TreeParams& params,
                      std::vector<std::size_t> rows, int m_features, Rng* rng,
                      std::vector<TreeNode>& nodes) {
    TreeBuilder builder{data, params, m_features, rng, nodes};
    builder.build(rows, 0);
}

std::unique_ptr<DecisionTreeModel> train_tree(const FeatureDataset& data, const TreeParams& params) {
    require_training_data(data);
    const auto t0 = std::chrono::steady_clock::now();

    auto model = std::make_unique<DecisionTreeModel>(data.feature_names);
    model->params = params;
    std::vector<std::size_t> rows(data.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    build_tree_nodes(data, params, std::move(rows), static_cast<int>(data.feature_names.size()),
                     nullptr, model->nodes);

    model->set_build_time_s(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return model;
}

}  // namespace har
