#include <fstream>
#include <json.hpp>

#include "har/classifiers.hpp"

namespace har {
namespace {

using nlohmann::json;

constexpr const char* kMagic = "HARMODEL";
constexpr int kVersion = 1;

json tree_to_json(const DecisionTreeModel& tree) {
    json nodes = json::array();
    for (const TreeNode& n : tree.nodes)
        nodes.push_back({{"f", n.feature},
                         {"t", n.threshold},
                         {"l", n.left},
                         {"r", n.right},
                         {"c", n.counts}});
    return {{"max_depth", tree.params.max_depth}, {"min_leaf", tree.params.min_leaf}, {"nodes", nodes}};
}

void tree_from_json(const json& j, DecisionTreeModel& tree) {
    tree.params.max_depth = j.at("max_depth").get<int>();
    tree.params.min_leaf = j.at("min_leaf").get<int>();
    tree.nodes.clear();
    for (const json& jn : j.at("nodes")) {
        TreeNode n;
        n.feature = jn.at("f").get<int>();
        n.threshold = jn.at("t").get<double>();
        n.left = jn.at("l").get<int>();
        n.right = jn.at("r").get<int>();
        n.counts = jn.at("c").get<std::array<std::int64_t, kActivityCount>>();
        tree.nodes.push_back(n);
    }
    if (tree.nodes.empty()) throw std::runtime_error("model file: empty tree");
}

json model_params(const TrainedModel& model) {
    switch (model.kind()) {
        case ModelKind::NaiveBayes: {
            const auto& m = dynamic_cast<const NaiveBayesModel&>(model);
            json classes = json::array();
            for (int c = 0; c < kActivityCount; ++c) {
                if (!m.present[static_cast<std::size_t>(c)]) continue;
                const auto& cs = m.classes[static_cast<std::size_t>(c)];
                classes.push_back({{"code", c},
                                   {"log_prior", cs.log_prior},
                                   {"means", cs.means},
                                   {"variances", cs.variances}});
            }
            return {{"classes", classes}};
        }
        case ModelKind::DecisionTree:
            return tree_to_json(dynamic_cast<const DecisionTreeModel&>(model));
        case ModelKind::RandomForest:
        case ModelKind::Bagging: {
            const auto& m = dynamic_cast<const EnsembleModel&>(model);
            json trees = json::array();
            for (const DecisionTreeModel& t : m.trees) trees.push_back(tree_to_json(t));
            return {{"m_features", m.m_features},
                    {"seed", m.seed},
                    {"bootstrap", m.bootstrap},
                    {"trees", trees}};
        }
        case ModelKind::Knn: {
            const auto& m = dynamic_cast<const KnnModel&>(model);
            return {{"k", m.k},
                    {"standardize", m.standardize},
                    {"means", m.means},
                    {"scales", m.scales},
                    {"rows", m.train_rows},
                    {"labels", m.train_labels}};
        }
    }
    throw std::logic_error("unreachable");
}

std::unique_ptr<TrainedModel> model_from_params(ModelKind kind, std::vector<std::string> names,
                                                const json& p) {
    switch (kind) {
        case ModelKind::NaiveBayes: {
            auto m = std::make_unique<NaiveBayesModel>(std::move(names));
            for (const json& jc : p.at("classes")) {
                const int code = jc.at("code").get<int>();
                activity_from_code_checked(code);
                m->present[static_cast<std::size_t>(code)] = true;
                auto& cs = m->classes[static_cast<std::size_t>(code)];
                cs.log_prior = jc.at("log_prior").get<double>();
                cs.means = jc.at("means").get<std::vector<double>>();
                cs.variances = jc.at("variances").get<std::vector<double>>();
                if (cs.means.size() != m->feature_names().size() ||
                    cs.variances.size() != m->feature_names().size())
                    throw std::runtime_error("model file: class stats width mismatch");
            }
            return m;
        }
        case ModelKind::DecisionTree: {
            auto m = std::make_unique<DecisionTreeModel>(std::move(names));
            tree_from_json(p, *m);
            return m;
        }
        case ModelKind::RandomForest:
        case ModelKind::Bagging: {
            auto m = std::make_unique<EnsembleModel>(kind, std::move(names));
            m->m_features = p.at("m_features").get<int>();
            m->seed = p.at("seed").get<std::uint64_t>();
            m->bootstrap = p.at("bootstrap").get<bool>();
            for (const json& jt : p.at("trees")) {
                DecisionTreeModel tree(m->feature_names());
                tree_from_json(jt, tree);
                m->trees.push_back(std::move(tree));
            }
            if (m->trees.empty()) throw std::runtime_error("model file: empty ensemble");
            return m;
        }
        case ModelKind::Knn: {
            auto m = std::make_unique<KnnModel>(std::move(names));
            m->k = p.at("k").get<int>();
            m->standardize = p.at("standardize").get<bool>();
            m->means = p.at("means").get<std::vector<double>>();
            m->scales = p.at("scales").get<std::vector<double>>();
            m->train_rows = p.at("rows").get<std::vector<std::vector<double>>>();
            for (int code : p.at("labels").get<std::vector<int>>())
                m->train_labels.push_back(activity_from_code_checked(code));
            if (m->k < 1 || static_cast<std::size_t>(m->k) > m->train_rows.size() ||
                m->train_rows.size() != m->train_labels.size())
                throw std::runtime_error("model file: inconsistent knn payload");
            return m;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

void save_model(const TrainedModel& model, std::ostream& out) {
    json j = {{"magic", kMagic},
              {"version", kVersion},
              {"kind", std::string(model_kind_name(model.kind()))},
              {"feature_names", model.feature_names()},
              {"build_time_s", model.build_time_s()},
              {"params", model_params(model)}};
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("model write failed");
}

void save_model_file(const TrainedModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_model(model, out);
}

std::unique_ptr<TrainedModel> load_model(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("model file: not a valid container: ") + e.what());
    }
    if (!j.is_object() || j.value("magic", "") != kMagic)
        throw std::runtime_error("model file: bad magic");
    if (j.value("version", -1) != kVersion)
        throw std::runtime_error("model file: unsupported version " + std::to_string(j.value("version", -1)));

    const auto kind = model_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw std::runtime_error("model file: unknown kind");
    auto names = j.at("feature_names").get<std::vector<std::string>>();
    auto model = model_from_params(*kind, std::move(names), j.at("params"));
    model->set_build_time_s(j.value("build_time_s", 0.0));
    return model;
}

std::unique_ptr<TrainedModel> load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_model(in);
}

}  // namespace har
