#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "har/series.hpp"
#include "har/stats.hpp"
#include "har/window.hpp"

namespace har {

inline constexpr int kFeatureCount = 42;

// Canonical names in extraction order: the seven statistics grouped per
// statistic across axes x,y,z for the time domain (0..20), then the same
// for the DFT magnitudes with an 'f' prefix (21..41).
const std::array<std::string, kFeatureCount>& feature_names();

// Index of a canonical name, or nullopt. Accepts the dataset's historical
// typo aliases: igracc* -> iqracc*, fqracc*/figracc* -> fiqracc*.
std::optional<int> feature_index(std::string_view name);

struct FeatureVector {
    std::array<double, kFeatureCount> values{};
    std::optional<Activity> label;
};

// 42 features of one aligned window triple: statistics of the raw windows,
// then of their DFT bin magnitudes.
FeatureVector extract_features(const WindowTriple& t);

// Rows share one feature-name list; labels are empty for unlabeled data.
struct FeatureDataset {
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> rows;
    std::vector<Activity> labels;  // empty or same length as rows

    std::size_t size() const { return rows.size(); }
    bool labeled() const { return !labels.empty(); }
    void validate() const;
};

// median filter -> window triples -> per-triple features.
FeatureDataset featurize(const LabeledSeries& series, int filter_width = 3, int stride = kWindowSize);

FeatureDataset dataset_from_feature_vectors(const std::vector<FeatureVector>& vectors);

// Computes only the features a trained model needs; per-axis statistics and
// DFTs are skipped when no selected feature uses them.
class SubsetExtractor {
public:
    explicit SubsetExtractor(const std::vector<std::string>& names);

    const std::vector<std::string>& names() const { return names_; }
    std::vector<double> extract(const WindowTriple& t) const;

private:
    std::vector<std::string> names_;
    std::vector<int> indices_;            // canonical feature indices, row order
    std::array<bool, 3> need_time_{};     // per-axis time-domain stats needed
    std::array<bool, 3> need_freq_{};     // per-axis DFT stats needed
};

}  // namespace har
