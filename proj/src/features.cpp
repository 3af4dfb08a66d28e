#include "har/features.hpp"

#include <stdexcept>

#include "har/dft.hpp"
#include "har/median_filter.hpp"

namespace har {
namespace {

constexpr std::array<std::string_view, 7> kStatNames = {
    "mean", "variance", "standarddeviation", "iqr", "kurtosis", "skewness", "energy"};
constexpr std::array<std::string_view, 3> kAxisNames = {"accx", "accy", "accz"};

std::array<std::string, kFeatureCount> build_names() {
    std::array<std::string, kFeatureCount> names;
    int i = 0;
    for (std::string_view prefix : {std::string_view(""), std::string_view("f")})
        for (std::string_view stat : kStatNames)
            for (std::string_view axis : kAxisNames)
                names[static_cast<std::size_t>(i++)] =
                    std::string(prefix) + std::string(stat) + std::string(axis);
    return names;
}

double stat_value(const WindowStats& s, int stat) {
    switch (stat) {
        case 0: return s.mean;
        case 1: return s.variance;
        case 2: return s.stddev;
        case 3: return s.iqr;
        case 4: return s.kurtosis;
        case 5: return s.skewness;
        default: return s.energy;
    }
}

std::string normalize_alias(std::string_view name) {
    std::string s(name);
    auto replace_prefix = [&](std::string_view from, std::string_view to) {
        if (s.rfind(from, 0) == 0) s = std::string(to) + s.substr(from.size());
    };
    // Typo forms that appear in historical feature lists.
    replace_prefix("figracc", "fiqracc");
    replace_prefix("fqracc", "fiqracc");
    replace_prefix("igracc", "iqracc");
    return s;
}

}  // namespace

const std::array<std::string, kFeatureCount>& feature_names() {
    static const std::array<std::string, kFeatureCount> names = build_names();
    return names;
}

std::optional<int> feature_index(std::string_view name) {
    const std::string canon = normalize_alias(name);
    const auto& names = feature_names();
    for (int i = 0; i < kFeatureCount; ++i)
        if (names[static_cast<std::size_t>(i)] == canon) return i;
    return std::nullopt;
}

FeatureVector extract_features(const WindowTriple& t) {
    const std::array<const Window*, 3> axes = {&t.wx, &t.wy, &t.wz};

    std::array<WindowStats, 3> time_stats;
    std::array<WindowStats, 3> freq_stats;
    for (int a = 0; a < 3; ++a) {
        time_stats[static_cast<std::size_t>(a)] = window_statistics(*axes[static_cast<std::size_t>(a)]);
        const auto mags = dft_magnitudes(*axes[static_cast<std::size_t>(a)]);
        freq_stats[static_cast<std::size_t>(a)] = window_statistics(mags);
    }

    FeatureVector fv;
    fv.label = t.label;
    int i = 0;
    for (const auto& stats : {time_stats, freq_stats})
        for (int stat = 0; stat < 7; ++stat)
            for (int a = 0; a < 3; ++a)
                fv.values[static_cast<std::size_t>(i++)] = stat_value(stats[static_cast<std::size_t>(a)], stat);
    return fv;
}

void FeatureDataset::validate() const {
    for (const auto& row : rows)
        if (row.size() != feature_names.size())
            throw std::invalid_argument("dataset row width does not match feature_names");
    if (labeled() && labels.size() != rows.size())
        throw std::invalid_argument("labels length does not match row count");
}

FeatureDataset featurize(const LabeledSeries& series, int filter_width, int stride) {
    series.validate();
    if (series.size() < static_cast<std::size_t>(kWindowSize))
        throw std::invalid_argument("series shorter than one window (8 samples)");

    const auto fx = median_filter(series.axis(0), filter_width);
    const auto fy = median_filter(series.axis(1), filter_width);
    const auto fz = median_filter(series.axis(2), filter_width);
    const auto triples = window_triples(fx, fy, fz, series.labels, stride);

    std::vector<FeatureVector> vectors;
    vectors.reserve(triples.size());
    for (const WindowTriple& t : triples) vectors.push_back(extract_features(t));
    return dataset_from_feature_vectors(vectors);
}

FeatureDataset dataset_from_feature_vectors(const std::vector<FeatureVector>& vectors) {
    FeatureDataset ds;
    ds.feature_names.assign(feature_names().begin(), feature_names().end());
    ds.rows.reserve(vectors.size());
    const bool labeled = !vectors.empty() && vectors.front().label.has_value();
    for (const FeatureVector& fv : vectors) {
        ds.rows.emplace_back(fv.values.begin(), fv.values.end());
        if (labeled) {
            if (!fv.label) throw std::invalid_argument("mixed labeled/unlabeled feature vectors");
            ds.labels.push_back(*fv.label);
        }
    }
    return ds;
}

SubsetExtractor::SubsetExtractor(const std::vector<std::string>& names) : names_(names) {
    indices_.reserve(names.size());
    for (const std::string& name : names) {
        auto idx = feature_index(name);
        if (!idx) throw std::invalid_argument("unknown feature name: " + name);
        indices_.push_back(*idx);
        const int axis = *idx % 3;
        if (*idx < kFeatureCount / 2)
            need_time_[static_cast<std::size_t>(axis)] = true;
        else
            need_freq_[static_cast<std::size_t>(axis)] = true;
    }
}

std::vector<double> SubsetExtractor::extract(const WindowTriple& t) const {
    const std::array<const Window*, 3> axes = {&t.wx, &t.wy, &t.wz};
    std::array<WindowStats, 3> time_stats;
    std::array<WindowStats, 3> freq_stats;
    for (int a = 0; a < 3; ++a) {
        if (need_time_[static_cast<std::size_t>(a)])
            time_stats[static_cast<std::size_t>(a)] = window_statistics(*axes[static_cast<std::size_t>(a)]);
        if (need_freq_[static_cast<std::size_t>(a)]) {
            const auto mags = dft_magnitudes(*axes[static_cast<std::size_t>(a)]);
            freq_stats[static_cast<std::size_t>(a)] = window_statistics(mags);
        }
    }
    std::vector<double> out;
    out.reserve(indices_.size());
    for (int idx : indices_) {
        const bool freq = idx >= kFeatureCount / 2;
        const int stat = (idx % (kFeatureCount / 2)) / 3;
        const int axis = idx % 3;
        const WindowStats& s =
            freq ? freq_stats[static_cast<std::size_t>(axis)] : time_stats[static_cast<std::size_t>(axis)];
        out.push_back(stat_value(s, stat));
    }
    return out;
}

}  // namespace har
