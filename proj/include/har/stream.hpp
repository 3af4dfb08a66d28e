#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "har/median_filter.hpp"
#include "har/met.hpp"
#include "har/model.hpp"
#include "har/series.hpp"

namespace har {

struct StreamConfig {
    double weight_kg = 70.0;
    int votes_per_decision = 10;
    int filter_width = 3;
    double sample_rate_hz = kDefaultSampleRateHz;
    MetTable met;
    // When set, a decision's elapsed_s is wall-clock time since the previous
    // decision instead of the deterministic votes*window/rate stream time.
    bool wall_clock_elapsed = false;

    void validate() const;
};

struct RecognitionEvent {
    std::size_t decision_index = 0;  // 0-based
    Activity activity = Activity::Idle;
    double elapsed_s = 0.0;
    double kcal_delta = 0.0;
    double kcal_total = 0.0;
    std::array<int, kActivityCount> votes{};
};

// Mode of the votes; ties go to the smallest activity code.
Activity majority_vote(std::span<const Activity> votes);

// Incremental pipeline: median filter -> 8-sample windows -> per-window
// classification -> majority decision every votes_per_decision windows.
// Trailing votes short of a full decision block are discarded.
class StreamRecognizer {
public:
    StreamRecognizer(const TrainedModel& model, StreamConfig cfg);

    // Feed one sample; returns any decisions it completed (at most one
    // unless votes_per_decision is tiny and the filter tail flushes).
    std::vector<RecognitionEvent> push(const Sample& s);

    // Flushes the filter tail. Call once, at end of stream.
    std::vector<RecognitionEvent> finish();

    double kcal_total() const { return kcal_total_; }
    std::size_t decisions() const { return decisions_; }
    std::size_t samples_seen() const { return samples_seen_; }

private:
    void consume_filtered(const std::array<std::vector<double>, 3>& fresh,
                          std::vector<RecognitionEvent>& out);

    const TrainedModel& model_;
    StreamConfig cfg_;
    SubsetExtractor extractor_;
    std::vector<StreamingMedianFilter> filters_;
    std::array<std::vector<double>, 3> pending_;  // filtered values awaiting a full window
    std::vector<Activity> votes_;
    double kcal_total_ = 0.0;
    std::size_t decisions_ = 0;
    std::size_t samples_seen_ = 0;
    std::chrono::steady_clock::time_point last_decision_time_;
};

// Runs a whole series through the recognizer.
std::vector<RecognitionEvent> run_stream(const LabeledSeries& series, const TrainedModel& model,
                                         const StreamConfig& cfg);

// Streams a raw CSV file, pacing delivery at sample_rate * rate_multiplier
// in wall time (multiplier 0 = as fast as possible). Values are identical
// to the file at any rate. Calls `sink` per event; returns all events.
std::vector<RecognitionEvent> replay_stream(const std::string& csv_path, const TrainedModel& model,
                                            const StreamConfig& cfg, double rate_multiplier,
                                            const std::function<void(const RecognitionEvent&)>& sink = {});

void write_event_jsonl(const RecognitionEvent& event, std::ostream& out);

}  // namespace har
