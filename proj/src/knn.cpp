#include <algorithm>
#include <chrono>
#include <cmath>

#include "har/classifiers.hpp"
#include "train_util.hpp"

namespace har {

std::array<double, kActivityCount> KnnModel::class_scores(std::span<const double> features) const {
    std::vector<double> query(features.begin(), features.end());
    if (standardize)
        for (std::size_t f = 0; f < query.size(); ++f) query[f] = (query[f] - means[f]) * scales[f];

    // (squared distance, training-row index); index order breaks ties.
    std::vector<std::pair<double, std::size_t>> dist(train_rows.size());
    for (std::size_t r = 0; r < train_rows.size(); ++r) {
        double d2 = 0.0;
        const auto& row = train_rows[r];
        for (std::size_t f = 0; f < query.size(); ++f) {
            const double d = query[f] - row[f];
            d2 += d * d;
        }
        dist[r] = {d2, r};
    }
    const auto kth = dist.begin() + k;
    std::partial_sort(dist.begin(), kth, dist.end());

    std::array<double, kActivityCount> votes{};
    for (int i = 0; i < k; ++i)
        votes[static_cast<std::size_t>(activity_code(train_labels[dist[static_cast<std::size_t>(i)].second]))] +=
            1.0 / static_cast<double>(k);
    return votes;
}

std::string KnnModel::hyperparams() const {
    std::string s = "k=" + std::to_string(k);
    if (!standardize) s += " no-standardize";
    return s;
}

std::unique_ptr<KnnModel> train_knn(const FeatureDataset& data, const KnnParams& params) {
    require_training_data(data);
    if (params.k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<std::size_t>(params.k) > data.rows.size())
        throw std::invalid_argument("k exceeds number of training rows");
    const auto t0 = std::chrono::steady_clock::now();

    const std::size_t d = data.feature_names.size();
    const std::size_t n = data.rows.size();
    auto model = std::make_unique<KnnModel>(data.feature_names);
    model->k = params.k;
    model->standardize = params.standardize;
    model->means.assign(d, 0.0);
    model->scales.assign(d, 1.0);

    if (params.standardize) {
        std::vector<double> sumsq(d, 0.0);
        for (const auto& row : data.rows)
            for (std::size_t f = 0; f < d; ++f) {
                model->means[f] += row[f];
                sumsq[f] += row[f] * row[f];
            }
        for (std::size_t f = 0; f < d; ++f) {
            model->means[f] /= static_cast<double>(n);
            const double var =
                std::max(sumsq[f] / static_cast<double>(n) - model->means[f] * model->means[f], 0.0);
            // Constant features contribute zero distance.
            model->scales[f] = var > 0.0 ? 1.0 / std::sqrt(var) : 0.0;
        }
    }

    model->train_rows.reserve(n);
    for (const auto& row : data.rows) {
        std::vector<double> stored(row);
        if (params.standardize)
            for (std::size_t f = 0; f < d; ++f) stored[f] = (stored[f] - model->means[f]) * model->scales[f];
        model->train_rows.push_back(std::move(stored));
    }
    model->train_labels = data.labels;

    model->set_build_time_s(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return model;
}

}  // namespace har
