#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "har/activity.hpp"
#include "har/features.hpp"

namespace har {

enum class ModelKind { NaiveBayes, DecisionTree, RandomForest, Bagging, Knn };

std::string_view model_kind_name(ModelKind kind);  // nb, tree, forest, bagging, knn
std::optional<ModelKind> model_kind_from_name(std::string_view name);

// Column indices of `wanted` names within `available`; throws on a miss.
std::vector<std::size_t> column_projection(const std::vector<std::string>& wanted,
                                           const std::vector<std::string>& available);

// Immutable trained classifier. Prediction input is aligned to
// feature_names(); predict_row() projects a wider row by name first.
class TrainedModel {
public:
    virtual ~TrainedModel() = default;

    ModelKind kind() const { return kind_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    double build_time_s() const { return build_time_s_; }
    void set_build_time_s(double s) { build_time_s_ = s; }

    // Per-class scores; higher wins. Scale is classifier-specific
    // (log-posterior for NB, vote fractions for ensembles and k-NN).
    virtual std::array<double, kActivityCount> class_scores(std::span<const double> features) const = 0;

    Activity predict(std::span<const double> features) const;
    Activity predict_row(std::span<const double> row, const std::vector<std::string>& row_names) const;

    virtual std::string hyperparams() const = 0;

protected:
    TrainedModel(ModelKind kind, std::vector<std::string> feature_names)
        : kind_(kind), feature_names_(std::move(feature_names)) {}

private:
    ModelKind kind_;
    std::vector<std::string> feature_names_;
    double build_time_s_ = 0.0;
};

// argmax with ties to the smallest activity code.
Activity argmax_activity(const std::array<double, kActivityCount>& scores);

void save_model(const TrainedModel& model, std::ostream& out);
void save_model_file(const TrainedModel& model, const std::string& path);
std::unique_ptr<TrainedModel> load_model(std::istream& in);
std::unique_ptr<TrainedModel> load_model_file(const std::string& path);

}  // namespace har
