#include "har/info_gain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace har {

double entropy_bits(std::span<const std::int64_t> counts, std::int64_t total) {
    if (total <= 0) return 0.0;
    double h = 0.0;
    for (std::int64_t c : counts) {
        if (c <= 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

ThresholdSplit best_threshold_split(std::span<const double> values, std::span<const Activity> labels,
                                    int min_leaf) {
    const std::size_t n = values.size();
    if (n != labels.size()) throw std::invalid_argument("values/labels size mismatch");
    if (n == 0) return {};

    std::vector<std::pair<double, Activity>> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = {values[i], labels[i]};
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::array<std::int64_t, kActivityCount> total_counts{};
    for (const auto& [v, l] : sorted) total_counts[static_cast<std::size_t>(activity_code(l))]++;
    const double parent_h = entropy_bits(total_counts, static_cast<std::int64_t>(n));

    ThresholdSplit best;
    std::array<std::int64_t, kActivityCount> left_counts{};
    auto right_counts = total_counts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto code = static_cast<std::size_t>(activity_code(sorted[i].second));
        left_counts[code]++;
        right_counts[code]--;
        if (sorted[i].first == sorted[i + 1].first) continue;
        const double t = 0.5 * (sorted[i].first + sorted[i + 1].first);
        if (!(t < sorted[i + 1].first)) continue;  // midpoint rounded onto the upper value
        const auto nl = static_cast<std::int64_t>(i + 1);
        const auto nr = static_cast<std::int64_t>(n) - nl;
        if (nl < min_leaf || nr < min_leaf) continue;
        const double child_h = (static_cast<double>(nl) * entropy_bits(left_counts, nl) +
                                static_cast<double>(nr) * entropy_bits(right_counts, nr)) /
                               static_cast<double>(n);
        const double gain = parent_h - child_h;
        if (gain > best.gain) best = {t, gain};
    }
    return best;
}

std::vector<RankedFeature> rank_features_info_gain(const FeatureDataset& data) {
    data.validate();
    if (data.rows.empty()) throw std::invalid_argument("empty dataset");
    if (!data.labeled()) throw std::invalid_argument("dataset has no labels");

    std::vector<RankedFeature> ranked;
    ranked.reserve(data.feature_names.size());
    std::vector<double> column(data.rows.size());
    for (std::size_t f = 0; f < data.feature_names.size(); ++f) {
        for (std::size_t r = 0; r < data.rows.size(); ++r) column[r] = data.rows[r][f];
        const ThresholdSplit split = best_threshold_split(column, data.labels, 1);
        ranked.push_back({data.feature_names[f], static_cast<int>(f), std::max(split.gain, 0.0)});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const RankedFeature& a, const RankedFeature& b) { return a.info_gain > b.info_gain; });
    return ranked;
}

FeatureDataset select_features(const FeatureDataset& data, const std::vector<std::string>& names) {
    data.validate();
    FeatureDataset out;
    out.labels = data.labels;
    std::vector<std::size_t> proj;
    for (const std::string& raw : names) {
        // Normalize via the canonical table when the name resolves there.
        std::string canon = raw;
        if (auto idx = feature_index(raw)) canon = feature_names()[static_cast<std::size_t>(*idx)];
        std::size_t col = data.feature_names.size();
        for (std::size_t i = 0; i < data.feature_names.size(); ++i)
            if (data.feature_names[i] == canon) {
                col = i;
                break;
            }
        if (col == data.feature_names.size())
            throw std::invalid_argument("unknown feature name: " + raw);
        if (std::find(proj.begin(), proj.end(), col) != proj.end())
            throw std::invalid_argument("duplicate feature name: " + raw);
        proj.push_back(col);
        out.feature_names.push_back(canon);
    }
    out.rows.reserve(data.rows.size());
    for (const auto& row : data.rows) {
        std::vector<double> selected;
        selected.reserve(proj.size());
        for (std::size_t col : proj) selected.push_back(row[col]);
        out.rows.push_back(std::move(selected));
    }
    return out;
}

}  // namespace har
