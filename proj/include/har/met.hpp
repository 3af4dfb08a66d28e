#pragma once

#include <array>
#include <stdexcept>

#include "har/activity.hpp"

namespace har {

// Metabolic equivalent per activity; 1 MET = 1 kcal/kg/hour.
struct MetTable {
    std::array<double, kActivityCount> values = kDefaults;

    static constexpr std::array<double, kActivityCount> kDefaults = {
        1.3,   // Idle
        2.0,   // SlowWalking
        3.5,   // NormalWalking
        4.3,   // FastWalking
        7.0,   // Jogging
        14.5,  // Running
        11.8,  // Jumping
    };

    double met(Activity a) const { return values[static_cast<std::size_t>(activity_code(a))]; }

    void validate() const {
        for (double v : values)
            if (!(v > 0.0)) throw std::invalid_argument("MET values must be positive");
    }
};

// kcal burnt over elapsed_s seconds at weight_kg.
inline double calories(Activity activity, double elapsed_s, double weight_kg,
                       const MetTable& met = MetTable{}) {
    if (!(weight_kg > 0.0)) throw std::invalid_argument("weight must be positive");
    if (elapsed_s < 0.0) throw std::invalid_argument("elapsed time must be non-negative");
    return elapsed_s * weight_kg * met.met(activity) / 3600.0;
}

}  // namespace har
