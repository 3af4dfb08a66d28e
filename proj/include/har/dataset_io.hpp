#pragma once

#include <iosfwd>
#include <string>

#include "har/features.hpp"

namespace har {

// Feature CSV: header of canonical feature names plus a trailing `activity`
// column when labeled. Any subset of the 42 names is accepted on read
// (aliases normalized), so projected datasets round-trip too.
FeatureDataset read_feature_csv(std::istream& in);
FeatureDataset read_feature_csv_file(const std::string& path);

void write_feature_csv(const FeatureDataset& ds, std::ostream& out);
void write_feature_csv_file(const FeatureDataset& ds, const std::string& path);

}  // namespace har
