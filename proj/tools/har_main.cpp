#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "har/csv.hpp"
#include "har/dataset_io.hpp"
#include "har/eval.hpp"
#include "har/info_gain.hpp"
#include "har/rng.hpp"
#include "har/stream.hpp"
#include "har/synth.hpp"
#include "har/text.hpp"

namespace {

using namespace har;

std::vector<std::string> parse_feature_list(const std::string& spec) {
    if (spec.empty()) return {};
    if (spec == "@table3") throw std::invalid_argument("@table3 is a bench preset; use @table3:<row>");
    if (spec.rfind("@table3:", 0) == 0) return table3_subset(spec.substr(8));
    std::vector<std::string> names;
    std::string current;
    for (char c : spec + ",") {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    return names;
}

Activity parse_activity_flag(const std::string& value) {
    if (auto a = activity_from_name(value)) return *a;
    if (auto code = parse_long(value))
        if (auto a = activity_from_code(static_cast<int>(*code))) return *a;
    throw std::invalid_argument("unknown activity '" + value + "'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    return file;
}

struct TrainFlags {
    std::string classifier = "nb";
    std::string features;
    int trees = 100;
    int m_features = 0;
    int bags = 10;
    int k = 1;
    int max_depth = 20;
    int min_leaf = 2;
    bool no_bootstrap = false;
    bool no_standardize = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--classifier,-c", classifier, "nb|tree|forest|bagging|knn")
            ->check(CLI::IsMember({"nb", "tree", "forest", "bagging", "knn"}));
        cmd->add_option("--features,-f", features,
                        "feature subset: comma/space separated names or @table3:<row>");
        cmd->add_option("--trees", trees, "forest: number of trees");
        cmd->add_option("--m-features", m_features, "forest: candidate features per node (0 = sqrt)");
        cmd->add_option("--bags", bags, "bagging: number of bags");
        cmd->add_option("--k", k, "knn: neighbors");
        cmd->add_option("--max-depth", max_depth, "tree growth limit");
        cmd->add_option("--min-leaf", min_leaf, "minimum rows per leaf");
        cmd->add_flag("--no-bootstrap", no_bootstrap, "train ensemble members on the full data");
        cmd->add_flag("--no-standardize", no_standardize, "knn: use raw feature scales");
    }

    PlanRow to_plan_row(std::uint64_t seed) const {
        PlanRow row;
        const auto kind = model_kind_from_name(classifier);
        if (!kind) throw std::invalid_argument("unknown classifier '" + classifier + "'");
        row.kind = *kind;
        row.features = parse_feature_list(features);
        row.tree = {max_depth, min_leaf};
        row.forest = {trees, m_features, seed, !no_bootstrap, row.tree};
        row.bagging = {bags, seed, !no_bootstrap, row.tree};
        row.knn = {k, !no_standardize};
        return row;
    }
};

std::vector<PlanRow> load_plan_file(const std::string& path, std::uint64_t seed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<PlanRow> plan;
    for (const nlohmann::json& jr : j) {
        TrainFlags flags;
        flags.classifier = jr.at("classifier").get<std::string>();
        if (jr.contains("features")) {
            if (jr["features"].is_array()) {
                std::string joined;
                for (const auto& f : jr["features"]) joined += f.get<std::string>() + ",";
                flags.features = joined;
            } else {
                flags.features = jr["features"].get<std::string>();
            }
        }
        flags.trees = jr.value("trees", flags.trees);
        flags.m_features = jr.value("m_features", flags.m_features);
        flags.bags = jr.value("bags", flags.bags);
        flags.k = jr.value("k", flags.k);
        flags.max_depth = jr.value("max_depth", flags.max_depth);
        flags.min_leaf = jr.value("min_leaf", flags.min_leaf);
        flags.no_bootstrap = !jr.value("bootstrap", true);
        flags.no_standardize = !jr.value("standardize", true);
        plan.push_back(flags.to_plan_row(seed));
    }
    if (plan.empty()) throw std::invalid_argument("plan file has no rows");
    return plan;
}

int run(int argc, char** argv) {
    CLI::App app{"Accelerometer activity recognition pipeline"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a labeled synthetic accelerometer CSV");
    std::string synth_activity = "all";
    double synth_duration = 0.0;
    double synth_rate = kDefaultSampleRateHz;
    std::string synth_out;
    synth->add_option("--activity,-a", synth_activity, "activity name, code, or 'all'");
    synth->add_option("--duration,-d", synth_duration, "seconds (per activity with 'all')")->required();
    synth->add_option("--sample-rate", synth_rate, "samples per second");
    synth->add_option("--seed", seed, "RNG seed");
    synth->add_option("--output,-o", synth_out, "output CSV path (default stdout)");

    // featurize
    auto* feat = app.add_subcommand("featurize", "Extract windowed features from a raw CSV");
    std::string feat_in, feat_out;
    int feat_width = 3, feat_stride = kWindowSize;
    double feat_rate = kDefaultSampleRateHz;
    feat->add_option("--input,-i", feat_in, "raw accelerometer CSV")->required();
    feat->add_option("--output,-o", feat_out, "feature CSV path (default stdout)");
    feat->add_option("--filter-width", feat_width, "median filter width (odd)");
    feat->add_option("--stride", feat_stride, "window start spacing in samples");
    feat->add_option("--sample-rate", feat_rate, "samples per second");

    // rank
    auto* rank = app.add_subcommand("rank", "Rank features by information gain");
    std::string rank_data, rank_out;
    rank->add_option("--data", rank_data, "labeled feature CSV")->required();
    rank->add_option("--output,-o", rank_out, "output path (default stdout)");

    // train
    auto* train = app.add_subcommand("train", "Train a classifier on a feature CSV");
    std::string train_data, train_out;
    TrainFlags train_flags;
    train->add_option("--data", train_data, "labeled feature CSV")->required();
    train->add_option("--model-out,-o", train_out, "model file path")->required();
    train->add_option("--seed", seed, "RNG seed");
    train_flags.attach(train);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a classifier with a seeded 70/30 split");
    std::string eval_data, eval_model, eval_records;
    double eval_fraction = 0.7;
    bool eval_no_table = false;
    TrainFlags eval_flags;
    eval_cmd->add_option("--data", eval_data, "labeled feature CSV")->required();
    eval_cmd->add_option("--model,-m", eval_model,
                         "saved model: evaluate on the whole file instead of training");
    eval_cmd->add_option("--train-fraction", eval_fraction, "training share of the split");
    eval_cmd->add_option("--seed", seed, "RNG seed");
    eval_cmd->add_option("--records", eval_records, "also write JSON-lines records here");
    eval_cmd->add_flag("--no-table", eval_no_table, "suppress the text table");
    eval_flags.attach(eval_cmd);

    // bench
    auto* bench = app.add_subcommand("bench", "Run a multi-classifier benchmark");
    std::string bench_data, bench_plan, bench_records, bench_preset = "table3";
    double bench_fraction = 0.7;
    bool bench_fresh = false;
    bench->add_option("--data", bench_data, "labeled feature CSV")->required();
    bench->add_option("--preset", bench_preset, "benchmark roster preset")->check(CLI::IsMember({"table3"}));
    bench->add_option("--plan", bench_plan, "JSON plan file (overrides --preset)");
    bench->add_option("--train-fraction", bench_fraction, "training share of the split");
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_option("--records", bench_records, "also write JSON-lines records here");
    bench->add_flag("--fresh-splits", bench_fresh, "re-split per plan row instead of sharing one split");
    bool bench_no_table = false;
    bench->add_flag("--no-table", bench_no_table, "suppress the text table");

    // stream
    auto* stream = app.add_subcommand("stream", "Replay a CSV through streaming recognition");
    std::string stream_model, stream_in, stream_out;
    double stream_weight = 70.0, stream_rate_mult = 0.0, stream_rate = kDefaultSampleRateHz;
    int stream_votes = 10, stream_width = 3;
    bool stream_wall = false;
    stream->add_option("--model,-m", stream_model, "trained model file")->required();
    stream->add_option("--input,-i", stream_in, "raw accelerometer CSV")->required();
    stream->add_option("--weight,-w", stream_weight, "body weight in kg");
    stream->add_option("--rate", stream_rate_mult, "replay rate multiplier (0 = as fast as possible)");
    stream->add_option("--sample-rate", stream_rate, "samples per second");
    stream->add_option("--votes", stream_votes, "window classifications per decision");
    stream->add_option("--filter-width", stream_width, "median filter width (odd)");
    stream->add_flag("--wall-clock", stream_wall, "use wall-clock elapsed time for calorie accounting");
    stream->add_option("--output,-o", stream_out, "JSON-lines output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Exit 2 for usage errors; --help exits 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (synth->parsed()) {
        SynthParams params;
        params.seed = seed;
        params.sample_rate_hz = synth_rate;
        LabeledSeries series = synth_activity == "all"
                                   ? synthesize_all(synth_duration, params)
                                   : synthesize(parse_activity_flag(synth_activity), synth_duration, params);
        std::ofstream file;
        write_csv(series, open_output(file, synth_out));
    } else if (feat->parsed()) {
        const LabeledSeries series = parse_csv_file(feat_in, feat_rate);
        const FeatureDataset ds = featurize(series, feat_width, feat_stride);
        std::ofstream file;
        write_feature_csv(ds, open_output(file, feat_out));
    } else if (rank->parsed()) {
        const FeatureDataset ds = read_feature_csv_file(rank_data);
        std::ofstream file;
        std::ostream& out = open_output(file, rank_out);
        out << "feature,info_gain_bits\n";
        for (const RankedFeature& rf : rank_features_info_gain(ds))
            out << rf.name << ',' << format_double(rf.info_gain) << '\n';
    } else if (train->parsed()) {
        const FeatureDataset ds = read_feature_csv_file(train_data);
        const auto model = train_plan_row(train_flags.to_plan_row(seed), ds, seed);
        save_model_file(*model, train_out);
        std::cerr << "trained " << model_kind_name(model->kind()) << " on " << ds.size()
                  << " rows (" << model->feature_names().size() << " features) in "
                  << model->build_time_s() << " s\n";
    } else if (eval_cmd->parsed()) {
        const FeatureDataset ds = read_feature_csv_file(eval_data);
        std::vector<EvaluationReport> reports;
        if (!eval_model.empty()) {
            const auto model = load_model_file(eval_model);
            EvaluationReport r = evaluate(*model, ds);
            r.seed = seed;
            reports.push_back(std::move(r));
        } else {
            reports = run_benchmark({eval_flags.to_plan_row(seed)}, ds, seed, eval_fraction);
        }
        if (!eval_no_table) std::cout << render_report_table(reports);
        if (!eval_records.empty()) {
            std::ofstream file;
            write_report_records(reports, open_output(file, eval_records));
        }
        if (reports.front().failed) throw std::runtime_error(reports.front().error);
    } else if (bench->parsed()) {
        const FeatureDataset ds = read_feature_csv_file(bench_data);
        const std::vector<PlanRow> plan =
            bench_plan.empty() ? table3_plan(seed) : load_plan_file(bench_plan, seed);
        std::vector<EvaluationReport> reports;
        if (bench_fresh) {
            for (std::size_t i = 0; i < plan.size(); ++i) {
                auto row_reports =
                    run_benchmark({plan[i]}, ds, derive_seed(seed, i), bench_fraction);
                reports.push_back(std::move(row_reports.front()));
            }
        } else {
            reports = run_benchmark(plan, ds, seed, bench_fraction);
        }
        if (!bench_no_table) std::cout << render_report_table(reports);
        if (!bench_records.empty()) {
            std::ofstream file;
            write_report_records(reports, open_output(file, bench_records));
        }
    } else if (stream->parsed()) {
        const auto model = load_model_file(stream_model);
        StreamConfig cfg;
        cfg.weight_kg = stream_weight;
        cfg.votes_per_decision = stream_votes;
        cfg.filter_width = stream_width;
        cfg.sample_rate_hz = stream_rate;
        cfg.wall_clock_elapsed = stream_wall;
        std::ofstream file;
        std::ostream& out = open_output(file, stream_out);
        replay_stream(stream_in, *model, cfg, stream_rate_mult,
                      [&](const RecognitionEvent& e) { write_event_jsonl(e, out); });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
