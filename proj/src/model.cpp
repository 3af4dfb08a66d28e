#include "har/model.hpp"

#include <stdexcept>

namespace har {

std::string_view model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::NaiveBayes: return "nb";
        case ModelKind::DecisionTree: return "tree";
        case ModelKind::RandomForest: return "forest";
        case ModelKind::Bagging: return "bagging";
        case ModelKind::Knn: return "knn";
    }
    return "?";
}

std::optional<ModelKind> model_kind_from_name(std::string_view name) {
    for (ModelKind k : {ModelKind::NaiveBayes, ModelKind::DecisionTree, ModelKind::RandomForest,
                        ModelKind::Bagging, ModelKind::Knn})
        if (model_kind_name(k) == name) return k;
    return std::nullopt;
}

std::vector<std::size_t> column_projection(const std::vector<std::string>& wanted,
                                           const std::vector<std::string>& available) {
    std::vector<std::size_t> proj;
    proj.reserve(wanted.size());
    for (const std::string& name : wanted) {
        std::size_t idx = available.size();
        for (std::size_t i = 0; i < available.size(); ++i)
            if (available[i] == name) {
                idx = i;
                break;
            }
        if (idx == available.size())
            throw std::invalid_argument("feature '" + name + "' not present in data columns");
        proj.push_back(idx);
    }
    return proj;
}

Activity argmax_activity(const std::array<double, kActivityCount>& scores) {
    int best = 0;
    for (int c = 1; c < kActivityCount; ++c)
        if (scores[static_cast<std::size_t>(c)] > scores[static_cast<std::size_t>(best)]) best = c;
    return static_cast<Activity>(best);
}

Activity TrainedModel::predict(std::span<const double> features) const {
    if (features.size() != feature_names().size())
        throw std::invalid_argument("feature vector width does not match model");
    return argmax_activity(class_scores(features));
}

Activity TrainedModel::predict_row(std::span<const double> row,
                                   const std::vector<std::string>& row_names) const {
    const auto proj = column_projection(feature_names(), row_names);
    std::vector<double> aligned;
    aligned.reserve(proj.size());
    for (std::size_t idx : proj) aligned.push_back(row[idx]);
    return predict(aligned);
}

}  // namespace har
