#include "har/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "har/rng.hpp"

namespace har {

void SynthParams::validate() const {
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const ActivityShape& s = shapes[i];
        if (s.amplitude < 0 || s.frequency < 0 || s.noise_sd < 0 || s.z_gain < 0)
            throw std::invalid_argument("synth shape parameters must be non-negative");
        // Ordering constraint runs Idle..Running; Jumping is off the scale.
        if (i > 0 && i <= static_cast<std::size_t>(activity_code(Activity::Running))) {
            const ActivityShape& prev = shapes[i - 1];
            if (s.amplitude < prev.amplitude || s.frequency < prev.frequency)
                throw std::invalid_argument("amplitude/frequency must be non-decreasing Idle..Running");
        }
    }
    if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("sample_rate_hz must be positive");
}

LabeledSeries synthesize(Activity activity, double duration_s, const SynthParams& params) {
    if (!(duration_s > 0.0)) throw std::invalid_argument("duration_s must be positive");
    params.validate();

    const ActivityShape& shape = params.shapes[static_cast<std::size_t>(activity_code(activity))];
    const auto n = static_cast<std::size_t>(duration_s * params.sample_rate_hz);

    // One noise stream per activity; independent of duration prefix.
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(activity_code(activity))));

    // Fixed per-axis phases decorrelate the three sinusoids.
    constexpr double kPhase[3] = {0.0, 2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0};

    LabeledSeries series;
    series.sample_rate_hz = params.sample_rate_hz;
    series.samples.reserve(n);
    series.labels.assign(n, activity);
    const double omega = 2.0 * std::numbers::pi * shape.frequency;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / params.sample_rate_hz;
        Sample s;
        s.ax = params.gravity[0] + shape.amplitude * std::sin(omega * t + kPhase[0]) +
               shape.noise_sd * rng.next_normal();
        s.ay = params.gravity[1] + shape.amplitude * std::sin(omega * t + kPhase[1]) +
               shape.noise_sd * rng.next_normal();
        s.az = params.gravity[2] + shape.amplitude * shape.z_gain * std::sin(omega * t + kPhase[2]) +
               shape.noise_sd * rng.next_normal();
        series.samples.push_back(s);
    }
    return series;
}

LabeledSeries synthesize_all(double duration_per_activity_s, const SynthParams& params) {
    LabeledSeries all;
    all.sample_rate_hz = params.sample_rate_hz;
    for (Activity a : kAllActivities) {
        LabeledSeries seg = synthesize(a, duration_per_activity_s, params);
        all.samples.insert(all.samples.end(), seg.samples.begin(), seg.samples.end());
        all.labels.insert(all.labels.end(), seg.labels.begin(), seg.labels.end());
    }
    return all;
}

}  // namespace har
