#include "har/stream.hpp"

#include <fstream>
#include <json.hpp>
#include <thread>

#include "har/csv.hpp"
#include "har/window.hpp"

namespace har {

void StreamConfig::validate() const {
    if (!(weight_kg > 0.0)) throw std::invalid_argument("weight must be positive");
    if (votes_per_decision < 1) throw std::invalid_argument("votes_per_decision must be >= 1");
    if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("sample_rate_hz must be positive");
    if (filter_width < 1 || filter_width % 2 == 0)
        throw std::invalid_argument("filter width must be odd and positive");
    met.validate();
}

Activity majority_vote(std::span<const Activity> votes) {
    if (votes.empty()) throw std::invalid_argument("majority_vote: empty vote buffer");
    return majority_label(votes);
}

StreamRecognizer::StreamRecognizer(const TrainedModel& model, StreamConfig cfg)
    : model_(model), cfg_(cfg), extractor_(model.feature_names()) {
    cfg_.validate();
    for (int axis = 0; axis < 3; ++axis) filters_.emplace_back(cfg_.filter_width);
    votes_.reserve(static_cast<std::size_t>(cfg_.votes_per_decision));
    last_decision_time_ = std::chrono::steady_clock::now();
}

void StreamRecognizer::consume_filtered(const std::array<std::vector<double>, 3>& fresh,
                                        std::vector<RecognitionEvent>& out) {
    for (int axis = 0; axis < 3; ++axis)
        pending_[static_cast<std::size_t>(axis)].insert(pending_[static_cast<std::size_t>(axis)].end(),
                                                        fresh[static_cast<std::size_t>(axis)].begin(),
                                                        fresh[static_cast<std::size_t>(axis)].end());

    while (pending_[0].size() >= static_cast<std::size_t>(kWindowSize)) {
        WindowTriple t;
        for (int i = 0; i < kWindowSize; ++i) {
            t.wx[static_cast<std::size_t>(i)] = pending_[0][static_cast<std::size_t>(i)];
            t.wy[static_cast<std::size_t>(i)] = pending_[1][static_cast<std::size_t>(i)];
            t.wz[static_cast<std::size_t>(i)] = pending_[2][static_cast<std::size_t>(i)];
        }
        for (auto& p : pending_) p.erase(p.begin(), p.begin() + kWindowSize);

        const std::vector<double> features = extractor_.extract(t);
        votes_.push_back(model_.predict(features));

        if (votes_.size() < static_cast<std::size_t>(cfg_.votes_per_decision)) continue;

        RecognitionEvent e;
        e.decision_index = decisions_;
        e.activity = majority_vote(votes_);
        for (Activity v : votes_) e.votes[static_cast<std::size_t>(activity_code(v))]++;
        votes_.clear();

        if (cfg_.wall_clock_elapsed) {
            // First decision measures from recognizer construction.
            const auto now = std::chrono::steady_clock::now();
            e.elapsed_s = std::chrono::duration<double>(now - last_decision_time_).count();
            last_decision_time_ = now;
        } else {
            e.elapsed_s = static_cast<double>(cfg_.votes_per_decision) * kWindowSize / cfg_.sample_rate_hz;
        }
        e.kcal_delta = calories(e.activity, e.elapsed_s, cfg_.weight_kg, cfg_.met);
        kcal_total_ += e.kcal_delta;
        e.kcal_total = kcal_total_;
        ++decisions_;
        out.push_back(e);
    }
}

std::vector<RecognitionEvent> StreamRecognizer::push(const Sample& s) {
    if (!s.finite()) throw std::invalid_argument("non-finite sample");
    ++samples_seen_;
    std::array<std::vector<double>, 3> fresh = {filters_[0].push(s.ax), filters_[1].push(s.ay),
                                                filters_[2].push(s.az)};
    std::vector<RecognitionEvent> out;
    consume_filtered(fresh, out);
    return out;
}

std::vector<RecognitionEvent> StreamRecognizer::finish() {
    std::array<std::vector<double>, 3> fresh = {filters_[0].finish(), filters_[1].finish(),
                                                filters_[2].finish()};
    std::vector<RecognitionEvent> out;
    consume_filtered(fresh, out);
    return out;
}

std::vector<RecognitionEvent> run_stream(const LabeledSeries& series, const TrainedModel& model,
                                         const StreamConfig& cfg) {
    StreamConfig effective = cfg;
    effective.sample_rate_hz = series.sample_rate_hz;
    StreamRecognizer rec(model, effective);
    std::vector<RecognitionEvent> events;
    for (const Sample& s : series.samples)
        for (RecognitionEvent& e : rec.push(s)) events.push_back(e);
    for (RecognitionEvent& e : rec.finish()) events.push_back(e);
    return events;
}

std::vector<RecognitionEvent> replay_stream(const std::string& csv_path, const TrainedModel& model,
                                            const StreamConfig& cfg, double rate_multiplier,
                                            const std::function<void(const RecognitionEvent&)>& sink) {
    if (rate_multiplier < 0.0) throw std::invalid_argument("rate multiplier must be >= 0");
    const LabeledSeries series = parse_csv_file(csv_path, cfg.sample_rate_hz);

    StreamRecognizer rec(model, cfg);
    std::vector<RecognitionEvent> events;
    const auto start = std::chrono::steady_clock::now();
    const bool paced = rate_multiplier > 0.0;
    const double delivery_hz = cfg.sample_rate_hz * rate_multiplier;

    for (std::size_t i = 0; i < series.samples.size(); ++i) {
        if (paced) {
            // Absolute deadlines, so sleep jitter does not accumulate.
            const auto deadline =
                start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(static_cast<double>(i) / delivery_hz));
            std::this_thread::sleep_until(deadline);
        }
        for (RecognitionEvent& e : rec.push(series.samples[i])) {
            if (sink) sink(e);
            events.push_back(e);
        }
    }
    for (RecognitionEvent& e : rec.finish()) {
        if (sink) sink(e);
        events.push_back(e);
    }
    return events;
}

void write_event_jsonl(const RecognitionEvent& event, std::ostream& out) {
    nlohmann::json j = {{"decision_index", event.decision_index},
                        {"activity_code", activity_code(event.activity)},
                        {"activity_name", std::string(activity_name(event.activity))},
                        {"elapsed_s", event.elapsed_s},
                        {"kcal_delta", event.kcal_delta},
                        {"kcal_total", event.kcal_total},
                        {"votes", event.votes}};
    out << j.dump() << '\n';
}

}  // namespace har
