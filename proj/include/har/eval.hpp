#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "har/classifiers.hpp"

namespace har {

struct EvaluationReport {
    std::string classifier;   // kind name
    std::string hyperparams;
    std::vector<std::string> feature_subset;
    double accuracy_pct = 0.0;
    double build_time_s = 0.0;
    // rows = true activity, cols = predicted
    std::array<std::array<std::int64_t, kActivityCount>, kActivityCount> confusion{};
    std::size_t n_train = 0;
    std::size_t n_test = 0;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
};

// Fisher-Yates shuffle with a seeded generator; the first
// floor(N * train_fraction) rows become the training set.
std::pair<FeatureDataset, FeatureDataset> shuffle_split(const FeatureDataset& data,
                                                        double train_fraction, std::uint64_t seed);

EvaluationReport evaluate(const TrainedModel& model, const FeatureDataset& test);

// One benchmark row: a classifier configuration plus a feature subset
// (empty subset = all columns).
struct PlanRow {
    ModelKind kind = ModelKind::NaiveBayes;
    std::vector<std::string> features;
    TreeParams tree;
    ForestParams forest;
    BaggingParams bagging;
    KnnParams knn;
};

std::unique_ptr<TrainedModel> train_plan_row(const PlanRow& row, const FeatureDataset& train,
                                             std::uint64_t seed);

// All plan rows share one split of `data`; failed rows are reported and the
// remaining rows still run.
std::vector<EvaluationReport> run_benchmark(const std::vector<PlanRow>& plan,
                                            const FeatureDataset& data, std::uint64_t seed,
                                            double train_fraction = 0.7);

// The benchmark roster of the source dataset study (feature-subset presets
// by row id: "1.2", "2.2", "3.2", "4.2").
const std::vector<std::string>& table3_subset(const std::string& row_id);
std::vector<PlanRow> table3_plan(std::uint64_t seed);

std::string render_report_table(const std::vector<EvaluationReport>& reports);
void write_report_records(const std::vector<EvaluationReport>& reports, std::ostream& out);  // JSON lines
std::vector<EvaluationReport> read_report_records(std::istream& in);

std::string format_accuracy(double accuracy_pct);  // 4 decimal places

}  // namespace har
