#include "har/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "har/info_gain.hpp"
#include "har/rng.hpp"

namespace har {

std::pair<FeatureDataset, FeatureDataset> shuffle_split(const FeatureDataset& data,
                                                        double train_fraction, std::uint64_t seed) {
    data.validate();
    if (data.rows.empty()) throw std::invalid_argument("empty dataset");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must be in (0, 1)");

    const std::size_t n = data.rows.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = rng.next_below(i + 1);
        std::swap(order[i], order[j]);
    }

    const auto n_train = static_cast<std::size_t>(static_cast<double>(n) * train_fraction);
    FeatureDataset train, test;
    train.feature_names = test.feature_names = data.feature_names;
    for (std::size_t i = 0; i < n; ++i) {
        FeatureDataset& dst = i < n_train ? train : test;
        dst.rows.push_back(data.rows[order[i]]);
        if (data.labeled()) dst.labels.push_back(data.labels[order[i]]);
    }
    return {std::move(train), std::move(test)};
}

EvaluationReport evaluate(const TrainedModel& model, const FeatureDataset& test) {
    test.validate();
    if (!test.labeled()) throw std::invalid_argument("test set has no labels");

    const auto proj = column_projection(model.feature_names(), test.feature_names);
    EvaluationReport report;
    report.classifier = model_kind_name(model.kind());
    report.hyperparams = model.hyperparams();
    report.feature_subset = model.feature_names();
    report.build_time_s = model.build_time_s();
    report.n_test = test.rows.size();

    std::vector<double> aligned(proj.size());
    std::int64_t correct = 0;
    for (std::size_t r = 0; r < test.rows.size(); ++r) {
        for (std::size_t f = 0; f < proj.size(); ++f) aligned[f] = test.rows[r][proj[f]];
        const Activity predicted = model.predict(aligned);
        const Activity truth = test.labels[r];
        report.confusion[static_cast<std::size_t>(activity_code(truth))]
                        [static_cast<std::size_t>(activity_code(predicted))]++;
        if (predicted == truth) ++correct;
    }
    report.accuracy_pct =
        100.0 * static_cast<double>(correct) / static_cast<double>(test.rows.size());
    return report;
}

std::unique_ptr<TrainedModel> train_plan_row(const PlanRow& row, const FeatureDataset& train,
                                             std::uint64_t seed) {
    const FeatureDataset* data = &train;
    FeatureDataset projected;
    if (!row.features.empty()) {
        projected = select_features(train, row.features);
        data = &projected;
    }
    switch (row.kind) {
        case ModelKind::NaiveBayes: return train_nb(*data);
        case ModelKind::DecisionTree: return train_tree(*data, row.tree);
        case ModelKind::RandomForest: {
            ForestParams p = row.forest;
            p.seed = seed;
            return train_forest(*data, p);
        }
        case ModelKind::Bagging: {
            BaggingParams p = row.bagging;
            p.seed = seed;
            return train_bagging(*data, p);
        }
        case ModelKind::Knn: return train_knn(*data, row.knn);
    }
    throw std::logic_error("unreachable");
}

std::vector<EvaluationReport> run_benchmark(const std::vector<PlanRow>& plan,
                                            const FeatureDataset& data, std::uint64_t seed,
                                            double train_fraction) {
    if (plan.empty()) throw std::invalid_argument("empty benchmark plan");
    auto [train, test] = shuffle_split(data, train_fraction, seed);

    std::vector<EvaluationReport> reports;
    reports.reserve(plan.size());
    for (const PlanRow& row : plan) {
        EvaluationReport report;
        try {
            const auto model = train_plan_row(row, train, seed);
            report = evaluate(*model, test);
        } catch (const std::exception& e) {
            report.classifier = model_kind_name(row.kind);
            report.feature_subset = row.features;
            report.failed = true;
            report.error = e.what();
        }
        report.n_train = train.rows.size();
        report.seed = seed;
        reports.push_back(std::move(report));
    }
    return reports;
}

const std::vector<std::string>& table3_subset(const std::string& row_id) {
    static const std::map<std::string, std::vector<std::string>> subsets = {
        {"1.2",
         {"meanaccx", "meanaccy", "varianceaccy", "standarddeviationaccx", "standarddeviationaccz",
          "kurtosisaccy", "kurtosisaccz", "skewnessaccx", "skewnessaccz", "fkurtosisaccz"}},
        {"2.2",
         {"meanaccx", "meanaccy", "meanaccz", "varianceaccz", "skewnessaccx", "energyaccy",
          "energyaccz", "fmeanaccx", "fmeanaccz", "fvarianceaccy", "fkurtosisaccz"}},
        // Published as "9 features" but listing these seven names.
        {"3.2",
         {"meanaccx", "meanaccy", "varianceaccx", "varianceaccy", "standarddeviationaccx",
          "standarddeviationaccy", "iqraccx"}},
        {"4.2",
         {"meanaccy", "meanaccz", "varianceaccx", "varianceaccy", "iqraccx", "skewnessaccx",
          "energyaccz", "fskewnessaccx"}},
    };
    auto it = subsets.find(row_id);
    if (it == subsets.end()) throw std::invalid_argument("unknown table3 row: " + row_id);
    return it->second;
}

std::vector<PlanRow> table3_plan(std::uint64_t seed) {
    std::vector<PlanRow> plan;
    auto add = [&](ModelKind kind, std::vector<std::string> features) {
        PlanRow row;
        row.kind = kind;
        row.features = std::move(features);
        row.forest.seed = seed;
        row.bagging.seed = seed;
        plan.push_back(std::move(row));
    };
    add(ModelKind::NaiveBayes, {});
    add(ModelKind::NaiveBayes, table3_subset("1.2"));
    add(ModelKind::DecisionTree, {});
    add(ModelKind::DecisionTree, table3_subset("2.2"));
    add(ModelKind::RandomForest, {});
    add(ModelKind::RandomForest, table3_subset("3.2"));
    add(ModelKind::Bagging, {});
    add(ModelKind::Bagging, table3_subset("4.2"));
    add(ModelKind::Knn, {});
    return plan;
}

std::string format_accuracy(double accuracy_pct) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << accuracy_pct;
    return os.str();
}

std::string render_report_table(const std::vector<EvaluationReport>& reports) {
    std::vector<std::array<std::string, 5>> cells;
    cells.push_back({"algorithm", "#features", "features", "accuracy %", "build time s"});
    for (const EvaluationReport& r : reports) {
        std::string features = "(all)";
        if (r.feature_subset.size() < static_cast<std::size_t>(kFeatureCount)) {
            features.clear();
            for (const auto& f : r.feature_subset) features += (features.empty() ? "" : " ") + f;
        }
        std::string name = r.classifier;
        if (!r.hyperparams.empty()) name += " [" + r.hyperparams + "]";
        if (r.failed) {
            cells.push_back({name, std::to_string(r.feature_subset.size()), features,
                             "FAILED: " + r.error, "-"});
        } else {
            std::ostringstream bt;
            bt << std::fixed << std::setprecision(4) << r.build_time_s;
            cells.push_back({name, std::to_string(r.feature_subset.size()), features,
                             format_accuracy(r.accuracy_pct), bt.str()});
        }
    }

    std::array<std::size_t, 5> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

void write_report_records(const std::vector<EvaluationReport>& reports, std::ostream& out) {
    for (const EvaluationReport& r : reports) {
        nlohmann::json j = {{"classifier", r.classifier},
                            {"hyperparams", r.hyperparams},
                            {"features", r.feature_subset},
                            {"n_train", r.n_train},
                            {"n_test", r.n_test},
                            {"seed", r.seed}};
        if (r.failed) {
            j["failed"] = true;
            j["error"] = r.error;
        } else {
            j["accuracy_pct"] = r.accuracy_pct;
            j["build_time_s"] = r.build_time_s;
            j["confusion"] = r.confusion;
        }
        out << j.dump() << '\n';
    }
}

std::vector<EvaluationReport> read_report_records(std::istream& in) {
    std::vector<EvaluationReport> reports;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        EvaluationReport r;
        r.classifier = j.at("classifier").get<std::string>();
        r.hyperparams = j.at("hyperparams").get<std::string>();
        r.feature_subset = j.at("features").get<std::vector<std::string>>();
        r.n_train = j.at("n_train").get<std::size_t>();
        r.n_test = j.at("n_test").get<std::size_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        if (j.value("failed", false)) {
            r.failed = true;
            r.error = j.at("error").get<std::string>();
        } else {
            r.accuracy_pct = j.at("accuracy_pct").get<double>();
            r.build_time_s = j.at("build_time_s").get<double>();
            r.confusion = j.at("confusion")
                              .get<std::array<std::array<std::int64_t, kActivityCount>, kActivityCount>>();
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace har
