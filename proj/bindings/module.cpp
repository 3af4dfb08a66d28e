#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "har/csv.hpp"
#include "har/dataset_io.hpp"
#include "har/dft.hpp"
#include "har/eval.hpp"
#include "har/info_gain.hpp"
#include "har/stream.hpp"
#include "har/synth.hpp"

namespace py = pybind11;
using namespace har;

namespace {

Activity to_activity(int code) { return activity_from_code_checked(code); }

std::vector<Activity> to_activities(const std::vector<int>& codes) {
    std::vector<Activity> out;
    out.reserve(codes.size());
    for (int c : codes) out.push_back(to_activity(c));
    return out;
}

std::vector<int> from_activities(const std::vector<Activity>& activities) {
    std::vector<int> out;
    out.reserve(activities.size());
    for (Activity a : activities) out.push_back(activity_code(a));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Accelerometer activity recognition pipeline (C++ core)";

    py::enum_<Activity>(m, "Activity")
        .value("IDLE", Activity::Idle)
        .value("SLOW_WALKING", Activity::SlowWalking)
        .value("NORMAL_WALKING", Activity::NormalWalking)
        .value("FAST_WALKING", Activity::FastWalking)
        .value("JOGGING", Activity::Jogging)
        .value("RUNNING", Activity::Running)
        .value("JUMPING", Activity::Jumping);

    m.def("activity_name", [](int code) { return std::string(activity_name(to_activity(code))); });
    m.def("activity_code", [](const std::string& name) {
        auto a = activity_from_name(name);
        if (!a) throw std::invalid_argument("unknown activity: " + name);
        return activity_code(*a);
    });

    py::class_<LabeledSeries>(m, "LabeledSeries")
        .def(py::init<>())
        .def_property_readonly("samples",
                               [](const LabeledSeries& s) {
                                   std::vector<std::tuple<double, double, double>> out;
                                   out.reserve(s.size());
                                   for (const Sample& x : s.samples) out.emplace_back(x.ax, x.ay, x.az);
                                   return out;
                               })
        .def_property_readonly("labels",
                               [](const LabeledSeries& s) { return from_activities(s.labels); })
        .def_readwrite("sample_rate_hz", &LabeledSeries::sample_rate_hz)
        .def("__len__", &LabeledSeries::size);

    m.def(
        "synthesize",
        [](const std::string& activity, double duration_s, std::uint64_t seed, double sample_rate_hz) {
            SynthParams p;
            p.seed = seed;
            p.sample_rate_hz = sample_rate_hz;
            if (activity == "all") return synthesize_all(duration_s, p);
            auto a = activity_from_name(activity);
            if (!a) throw std::invalid_argument("unknown activity: " + activity);
            return synthesize(*a, duration_s, p);
        },
        py::arg("activity"), py::arg("duration_s"), py::arg("seed") = 0,
        py::arg("sample_rate_hz") = kDefaultSampleRateHz,
        "Seeded sinusoid-plus-noise generator; activity name or 'all'.");

    m.def("read_csv", &parse_csv_file, py::arg("path"), py::arg("sample_rate_hz") = kDefaultSampleRateHz);
    m.def("write_csv", &write_csv_file, py::arg("series"), py::arg("path"));

    m.def(
        "median_filter",
        [](const std::vector<double>& values, int width) { return median_filter(values, width); },
        py::arg("values"), py::arg("width") = 3);

    m.def("dft_magnitudes", [](const std::vector<double>& values) {
        if (values.size() != static_cast<std::size_t>(kWindowSize))
            throw std::invalid_argument("expected exactly 8 values");
        Window w;
        std::copy(values.begin(), values.end(), w.begin());
        const auto mags = dft_magnitudes(w);
        return std::vector<double>(mags.begin(), mags.end());
    });

    m.def("window_statistics", [](const std::vector<double>& values) {
        const WindowStats s = window_statistics(values);
        py::dict d;
        d["mean"] = s.mean;
        d["variance"] = s.variance;
        d["stddev"] = s.stddev;
        d["iqr"] = s.iqr;
        d["kurtosis"] = s.kurtosis;
        d["skewness"] = s.skewness;
        d["energy"] = s.energy;
        return d;
    });

    m.def("feature_names", [] {
        return std::vector<std::string>(feature_names().begin(), feature_names().end());
    });

    py::class_<FeatureDataset>(m, "FeatureDataset")
        .def(py::init([](const std::vector<std::string>& names,
                         const std::vector<std::vector<double>>& rows, const std::vector<int>& labels) {
                 FeatureDataset ds;
                 ds.feature_names = names;
                 ds.rows = rows;
                 ds.labels = to_activities(labels);
                 ds.validate();
                 return ds;
             }),
             py::arg("feature_names"), py::arg("rows"), py::arg("labels") = std::vector<int>{})
        .def_readonly("feature_names", &FeatureDataset::feature_names)
        .def_readonly("rows", &FeatureDataset::rows)
        .def_property_readonly("labels",
                               [](const FeatureDataset& ds) { return from_activities(ds.labels); })
        .def("__len__", &FeatureDataset::size);

    m.def("featurize", &featurize, py::arg("series"), py::arg("filter_width") = 3,
          py::arg("stride") = kWindowSize);
    m.def("read_feature_csv", &read_feature_csv_file, py::arg("path"));
    m.def("write_feature_csv", &write_feature_csv_file, py::arg("dataset"), py::arg("path"));

    m.def("rank_features_info_gain", [](const FeatureDataset& ds) {
        std::vector<std::pair<std::string, double>> out;
        for (const RankedFeature& rf : rank_features_info_gain(ds)) out.emplace_back(rf.name, rf.info_gain);
        return out;
    });
    m.def("select_features", &select_features, py::arg("dataset"), py::arg("names"));
    m.def("table3_subset", [](const std::string& row) { return table3_subset(row); });

    py::class_<TrainedModel>(m, "TrainedModel")
        .def_property_readonly("kind",
                               [](const TrainedModel& model) {
                                   return std::string(model_kind_name(model.kind()));
                               })
        .def_property_readonly("feature_names", &TrainedModel::feature_names)
        .def_property_readonly("build_time_s", &TrainedModel::build_time_s)
        .def("predict",
             [](const TrainedModel& model, const std::vector<double>& features) {
                 return activity_code(model.predict(features));
             })
        .def("predict_row",
             [](const TrainedModel& model, const std::vector<double>& row,
                const std::vector<std::string>& row_names) {
                 return activity_code(model.predict_row(row, row_names));
             })
        .def("class_scores",
             [](const TrainedModel& model, const std::vector<double>& features) {
                 const auto scores = model.class_scores(features);
                 return std::vector<double>(scores.begin(), scores.end());
             })
        .def("save", [](const TrainedModel& model, const std::string& path) {
            save_model_file(model, path);
        });

    m.def(
        "train_nb",
        [](const FeatureDataset& ds) -> std::unique_ptr<TrainedModel> { return train_nb(ds); },
        py::arg("dataset"));
    m.def(
        "train_tree",
        [](const FeatureDataset& ds, int max_depth, int min_leaf) -> std::unique_ptr<TrainedModel> {
            return train_tree(ds, {max_depth, min_leaf});
        },
        py::arg("dataset"), py::arg("max_depth") = 20, py::arg("min_leaf") = 2);
    m.def(
        "train_forest",
        [](const FeatureDataset& ds, int n_trees, int m_features, std::uint64_t seed,
           bool bootstrap) -> std::unique_ptr<TrainedModel> {
            ForestParams p;
            p.n_trees = n_trees;
            p.m_features = m_features;
            p.seed = seed;
            p.bootstrap = bootstrap;
            return train_forest(ds, p);
        },
        py::arg("dataset"), py::arg("n_trees") = 100, py::arg("m_features") = 0, py::arg("seed") = 0,
        py::arg("bootstrap") = true);
    m.def(
        "train_bagging",
        [](const FeatureDataset& ds, int n_bags, std::uint64_t seed,
           bool bootstrap) -> std::unique_ptr<TrainedModel> {
            BaggingParams p;
            p.n_bags = n_bags;
            p.seed = seed;
            p.bootstrap = bootstrap;
            return train_bagging(ds, p);
        },
        py::arg("dataset"), py::arg("n_bags") = 10, py::arg("seed") = 0, py::arg("bootstrap") = true);
    m.def(
        "train_knn",
        [](const FeatureDataset& ds, int k, bool standardize) -> std::unique_ptr<TrainedModel> {
            return train_knn(ds, {k, standardize});
        },
        py::arg("dataset"), py::arg("k") = 1, py::arg("standardize") = true);
    m.def("load_model", &load_model_file, py::arg("path"));

    py::class_<EvaluationReport>(m, "EvaluationReport")
        .def_readonly("classifier", &EvaluationReport::classifier)
        .def_readonly("hyperparams", &EvaluationReport::hyperparams)
        .def_readonly("feature_subset", &EvaluationReport::feature_subset)
        .def_readonly("accuracy_pct", &EvaluationReport::accuracy_pct)
        .def_readonly("build_time_s", &EvaluationReport::build_time_s)
        .def_readonly("n_train", &EvaluationReport::n_train)
        .def_readonly("n_test", &EvaluationReport::n_test)
        .def_readonly("seed", &EvaluationReport::seed)
        .def_readonly("failed", &EvaluationReport::failed)
        .def_readonly("error", &EvaluationReport::error)
        .def_property_readonly("confusion", [](const EvaluationReport& r) {
            std::vector<std::vector<std::int64_t>> out;
            for (const auto& row : r.confusion) out.emplace_back(row.begin(), row.end());
            return out;
        });

    m.def("shuffle_split", &shuffle_split, py::arg("dataset"), py::arg("train_fraction") = 0.7,
          py::arg("seed") = 0);
    m.def("evaluate", &evaluate, py::arg("model"), py::arg("test"));
    m.def(
        "run_table3_benchmark",
        [](const FeatureDataset& ds, std::uint64_t seed, double train_fraction) {
            return run_benchmark(table3_plan(seed), ds, seed, train_fraction);
        },
        py::arg("dataset"), py::arg("seed") = 0, py::arg("train_fraction") = 0.7);
    m.def("render_report_table", &render_report_table);

    m.def("majority_vote", [](const std::vector<int>& votes) {
        return activity_code(majority_vote(to_activities(votes)));
    });
    m.def(
        "calories",
        [](int activity_code_, double elapsed_s, double weight_kg) {
            return calories(to_activity(activity_code_), elapsed_s, weight_kg);
        },
        py::arg("activity"), py::arg("elapsed_s"), py::arg("weight_kg"));
    m.def("met_value", [](int code) { return MetTable{}.met(to_activity(code)); });

    py::class_<RecognitionEvent>(m, "RecognitionEvent")
        .def_readonly("decision_index", &RecognitionEvent::decision_index)
        .def_property_readonly("activity",
                               [](const RecognitionEvent& e) { return activity_code(e.activity); })
        .def_property_readonly("activity_name",
                               [](const RecognitionEvent& e) {
                                   return std::string(activity_name(e.activity));
                               })
        .def_readonly("elapsed_s", &RecognitionEvent::elapsed_s)
        .def_readonly("kcal_delta", &RecognitionEvent::kcal_delta)
        .def_readonly("kcal_total", &RecognitionEvent::kcal_total)
        .def_property_readonly("votes",
                               [](const RecognitionEvent& e) {
                                   return std::vector<int>(e.votes.begin(), e.votes.end());
                               })
        .def("__repr__", [](const RecognitionEvent& e) {
            std::ostringstream os;
            os << "RecognitionEvent(" << e.decision_index << ", " << activity_name(e.activity)
               << ", kcal_total=" << e.kcal_total << ")";
            return os.str();
        });

    m.def(
        "run_stream",
        [](const LabeledSeries& series, const TrainedModel& model, double weight_kg,
           int votes_per_decision, int filter_width) {
            StreamConfig cfg;
            cfg.weight_kg = weight_kg;
            cfg.votes_per_decision = votes_per_decision;
            cfg.filter_width = filter_width;
            return run_stream(series, model, cfg);
        },
        py::arg("series"), py::arg("model"), py::arg("weight_kg") = 70.0,
        py::arg("votes_per_decision") = 10, py::arg("filter_width") = 3);
    m.def(
        "replay_stream",
        [](const std::string& path, const TrainedModel& model, double rate_multiplier,
           double weight_kg, double sample_rate_hz) {
            StreamConfig cfg;
            cfg.weight_kg = weight_kg;
            cfg.sample_rate_hz = sample_rate_hz;
            return replay_stream(path, model, cfg, rate_multiplier);
        },
        py::arg("path"), py::arg("model"), py::arg("rate_multiplier") = 0.0,
        py::arg("weight_kg") = 70.0, py::arg("sample_rate_hz") = kDefaultSampleRateHz);
}
