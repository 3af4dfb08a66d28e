#pragma once

#include <stdexcept>

#include "har/features.hpp"

namespace har {

inline void require_training_data(const FeatureDataset& data) {
    data.validate();
    if (data.rows.empty()) throw std::invalid_argument("empty dataset");
    if (!data.labeled()) throw std::invalid_argument("dataset has no labels");
}

}  // namespace har
