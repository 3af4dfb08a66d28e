#pragma once

#include <span>
#include <string>
#include <vector>

#include "har/features.hpp"

namespace har {

// Shannon entropy in bits of a label count vector.
double entropy_bits(std::span<const std::int64_t> counts, std::int64_t total);

// Best binary threshold split of one feature column: candidate thresholds
// are midpoints between consecutive distinct sorted values, children must
// hold at least min_leaf rows each. gain < 0 means no admissible split.
struct ThresholdSplit {
    double threshold = 0.0;
    double gain = -1.0;
};
ThresholdSplit best_threshold_split(std::span<const double> values, std::span<const Activity> labels,
                                    int min_leaf = 1);

struct RankedFeature {
    std::string name;
    int index = 0;  // column index in the source dataset
    double info_gain = 0.0;
};

// Features sorted by descending gain; ties keep ascending column order.
std::vector<RankedFeature> rank_features_info_gain(const FeatureDataset& data);

// Column projection by name; aliases accepted, duplicates rejected.
FeatureDataset select_features(const FeatureDataset& data, const std::vector<std::string>& names);

}  // namespace har
