#include "har/activity.hpp"

#include <cctype>

namespace har {

std::optional<Activity> activity_from_name(std::string_view name) {
    std::string lowered;
    lowered.reserve(name.size());
    for (char c : name) {
        if (c == '_' || c == '-' || c == ' ') continue;
        lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (Activity a : kAllActivities) {
        std::string canon;
        for (char c : activity_name(a))
            canon.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (lowered == canon) return a;
    }
    return std::nullopt;
}

}  // namespace har
