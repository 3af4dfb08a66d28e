#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace har {

// The seven recognized activities. Codes 0 and 2 are fixed by the dataset
// format; the rest follow the listing order Idle -> Jumping.
enum class Activity : std::uint8_t {
    Idle = 0,
    SlowWalking = 1,
    NormalWalking = 2,
    FastWalking = 3,
    Jogging = 4,
    Running = 5,
    Jumping = 6,
};

inline constexpr int kActivityCount = 7;

inline constexpr std::array<Activity, kActivityCount> kAllActivities = {
    Activity::Idle,          Activity::SlowWalking, Activity::NormalWalking,
    Activity::FastWalking,   Activity::Jogging,     Activity::Running,
    Activity::Jumping,
};

constexpr int activity_code(Activity a) { return static_cast<int>(a); }

constexpr std::string_view activity_name(Activity a) {
    switch (a) {
        case Activity::Idle: return "Idle";
        case Activity::SlowWalking: return "SlowWalking";
        case Activity::NormalWalking: return "NormalWalking";
        case Activity::FastWalking: return "FastWalking";
        case Activity::Jogging: return "Jogging";
        case Activity::Running: return "Running";
        case Activity::Jumping: return "Jumping";
    }
    return "?";
}

inline std::optional<Activity> activity_from_code(int code) {
    if (code < 0 || code >= kActivityCount) return std::nullopt;
    return static_cast<Activity>(code);
}

// Case-insensitive name lookup; accepts "slow_walking"/"slow-walking" style
// separators so CLI flags read naturally.
std::optional<Activity> activity_from_name(std::string_view name);

inline Activity activity_from_code_checked(int code) {
    auto a = activity_from_code(code);
    if (!a) throw std::invalid_argument("activity code out of range 0..6: " + std::to_string(code));
    return *a;
}

}  // namespace har
