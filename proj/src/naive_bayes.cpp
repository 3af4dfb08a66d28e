#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "har/classifiers.hpp"
#include "train_util.hpp"

namespace har {
namespace {

constexpr double kVarianceFloorRel = 1e-9;

}  // namespace

std::array<double, kActivityCount> NaiveBayesModel::class_scores(std::span<const double> features) const {
    std::array<double, kActivityCount> scores;
    scores.fill(-std::numeric_limits<double>::infinity());
    for (int c = 0; c < kActivityCount; ++c) {
        if (!present[static_cast<std::size_t>(c)]) continue;
        const ClassStats& cs = classes[static_cast<std::size_t>(c)];
        double score = cs.log_prior;
        for (std::size_t f = 0; f < features.size(); ++f) {
            const double var = cs.variances[f];
            const double d = features[f] - cs.means[f];
            score += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
        }
        scores[static_cast<std::size_t>(c)] = score;
    }
    return scores;
}

std::string NaiveBayesModel::hyperparams() const { return ""; }

std::unique_ptr<NaiveBayesModel> train_nb(const FeatureDataset& data) {
    require_training_data(data);
    const auto t0 = std::chrono::steady_clock::now();

    const std::size_t d = data.feature_names.size();
    const std::size_t n = data.rows.size();
    auto model = std::make_unique<NaiveBayesModel>(data.feature_names);

    // Global per-feature population variance sets the floor scale.
    std::vector<double> g_sum(d, 0.0), g_sumsq(d, 0.0);
    for (const auto& row : data.rows)
        for (std::size_t f = 0; f < d; ++f) {
            g_sum[f] += row[f];
            g_sumsq[f] += row[f] * row[f];
        }
    std::vector<double> floor(d);
    for (std::size_t f = 0; f < d; ++f) {
        const double mean = g_sum[f] / static_cast<double>(n);
        const double var = std::max(g_sumsq[f] / static_cast<double>(n) - mean * mean, 0.0);
        floor[f] = kVarianceFloorRel * std::max(1.0, var);
    }

    std::array<std::int64_t, kActivityCount> counts{};
    std::array<std::vector<double>, kActivityCount> sums, sumsqs;
    for (auto& v : sums) v.assign(d, 0.0);
    for (auto& v : sumsqs) v.assign(d, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto c = static_cast<std::size_t>(activity_code(data.labels[r]));
        counts[c]++;
        for (std::size_t f = 0; f < d; ++f) {
            sums[c][f] += data.rows[r][f];
            sumsqs[c][f] += data.rows[r][f] * data.rows[r][f];
        }
    }

    for (int c = 0; c < kActivityCount; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        if (counts[ci] == 0) continue;
        model->present[ci] = true;
        NaiveBayesModel::ClassStats& cs = model->classes[ci];
        const auto nc = static_cast<double>(counts[ci]);
        cs.log_prior = std::log(nc / static_cast<double>(n));
        cs.means.resize(d);
        cs.variances.resize(d);
        for (std::size_t f = 0; f < d; ++f) {
            cs.means[f] = sums[ci][f] / nc;
            const double var = std::max(sumsqs[ci][f] / nc - cs.means[f] * cs.means[f], 0.0);
            cs.variances[f] = std::max(var, floor[f]);
        }
    }

    model->set_build_time_s(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return model;
}

}  // namespace har
