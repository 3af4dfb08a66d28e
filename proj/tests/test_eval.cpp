#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "har/eval.hpp"
#include "har/synth.hpp"

using namespace har;

namespace {

FeatureDataset synthetic_features(double seconds_per_activity, std::uint64_t seed) {
    SynthParams p;
    p.seed = seed;
    return featurize(synthesize_all(seconds_per_activity, p));
}

FeatureDataset single_class(std::size_t n, Activity a) {
    FeatureDataset ds;
    ds.feature_names = {"f"};
    for (std::size_t i = 0; i < n; ++i) {
        ds.rows.push_back({static_cast<double>(i)});
        ds.labels.push_back(a);
    }
    return ds;
}

std::multiset<std::pair<double, int>> as_multiset(const FeatureDataset& ds) {
    std::multiset<std::pair<double, int>> out;
    for (std::size_t i = 0; i < ds.rows.size(); ++i)
        out.insert({ds.rows[i][0], activity_code(ds.labels[i])});
    return out;
}

}  // namespace

TEST_CASE("shuffle_split produces a 7/3 partition of 10 rows") {
    FeatureDataset ds;
    ds.feature_names = {"f"};
    for (int i = 0; i < 10; ++i) {
        ds.rows.push_back({static_cast<double>(i)});
        ds.labels.push_back(static_cast<Activity>(i % 7));
    }
    const auto [train, test] = shuffle_split(ds, 0.7, 42);
    CHECK(train.rows.size() == 7);
    CHECK(test.rows.size() == 3);

    auto combined = as_multiset(train);
    for (const auto& e : as_multiset(test)) combined.insert(e);
    CHECK(combined == as_multiset(ds));
}

TEST_CASE("shuffle_split is deterministic per seed and varies across seeds") {
    const FeatureDataset ds = single_class(50, Activity::Idle);
    const auto [a_train, a_test] = shuffle_split(ds, 0.7, 9);
    const auto [b_train, b_test] = shuffle_split(ds, 0.7, 9);
    CHECK(a_train.rows == b_train.rows);
    CHECK(a_test.rows == b_test.rows);
    const auto [c_train, c_test] = shuffle_split(ds, 0.7, 10);
    CHECK(a_train.rows != c_train.rows);
}

TEST_CASE("shuffle_split validates its inputs") {
    const FeatureDataset ds = single_class(10, Activity::Idle);
    CHECK_THROWS_AS(shuffle_split(ds, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(shuffle_split(ds, 1.0, 1), std::invalid_argument);
    FeatureDataset empty;
    empty.feature_names = {"f"};
    CHECK_THROWS_AS(shuffle_split(empty, 0.7, 1), std::invalid_argument);
}

TEST_CASE("evaluate a constant predictor") {
    // NB trained on one class predicts it everywhere.
    const auto model = train_nb(single_class(5, Activity::Idle));

    const FeatureDataset all_idle = single_class(20, Activity::Idle);
    const EvaluationReport perfect = evaluate(*model, all_idle);
    CHECK(perfect.accuracy_pct == 100.0);
    CHECK(perfect.n_test == 20);

    // Balanced 7-class test: the constant model scores 1/7.
    FeatureDataset balanced;
    balanced.feature_names = {"f"};
    for (int c = 0; c < 7; ++c)
        for (int i = 0; i < 10; ++i) {
            balanced.rows.push_back({static_cast<double>(i)});
            balanced.labels.push_back(static_cast<Activity>(c));
        }
    const EvaluationReport mixed = evaluate(*model, balanced);
    CHECK(mixed.accuracy_pct == doctest::Approx(100.0 / 7.0).epsilon(1e-12));
    CHECK(format_accuracy(mixed.accuracy_pct) == "14.2857");
}

TEST_CASE("confusion matrix counts and accuracy agree two ways") {
    const FeatureDataset ds = synthetic_features(1.0, 40);
    const auto [train, test] = shuffle_split(ds, 0.7, 4);
    const auto model = train_nb(train);
    const EvaluationReport r = evaluate(*model, test);

    // Row sums equal per-class test counts.
    std::array<std::int64_t, kActivityCount> class_counts{};
    for (Activity a : test.labels) class_counts[static_cast<std::size_t>(activity_code(a))]++;
    std::int64_t total = 0, trace = 0;
    for (int t = 0; t < kActivityCount; ++t) {
        std::int64_t row_sum = 0;
        for (int p = 0; p < kActivityCount; ++p) {
            row_sum += r.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
            total += r.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
        }
        trace += r.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
        CHECK(row_sum == class_counts[static_cast<std::size_t>(t)]);
    }
    CHECK(total == static_cast<std::int64_t>(r.n_test));
    CHECK(r.accuracy_pct ==
          doctest::Approx(100.0 * static_cast<double>(trace) / static_cast<double>(r.n_test))
              .epsilon(1e-12));
    CHECK(evaluate(*model, test).accuracy_pct == r.accuracy_pct);  // repeatable
}

TEST_CASE("evaluate rejects unlabeled test data") {
    const auto model = train_nb(single_class(5, Activity::Idle));
    FeatureDataset unlabeled;
    unlabeled.feature_names = {"f"};
    unlabeled.rows.push_back({1.0});
    CHECK_THROWS_AS(evaluate(*model, unlabeled), std::invalid_argument);
}

TEST_CASE("the default benchmark plan covers the roster minus SVM") {
    const auto plan = table3_plan(1);
    REQUIRE(plan.size() == 9);
    CHECK(plan[0].kind == ModelKind::NaiveBayes);
    CHECK(plan[0].features.empty());
    CHECK(plan[1].features.size() == 10);
    CHECK(plan[2].kind == ModelKind::DecisionTree);
    CHECK(plan[3].features.size() == 11);
    CHECK(plan[4].kind == ModelKind::RandomForest);
    CHECK(plan[5].features.size() == 7);
    CHECK(plan[6].kind == ModelKind::Bagging);
    CHECK(plan[7].features.size() == 8);
    CHECK(plan[8].kind == ModelKind::Knn);
}

TEST_CASE("run_benchmark shares one split, reports in plan order, and survives row failures") {
    const FeatureDataset ds = synthetic_features(1.0, 44);

    std::vector<PlanRow> plan;
    PlanRow nb;
    nb.kind = ModelKind::NaiveBayes;
    PlanRow bad;
    bad.kind = ModelKind::Knn;
    bad.knn.k = 1000000;  // k > n_train, must fail
    PlanRow tree;
    tree.kind = ModelKind::DecisionTree;
    plan.push_back(nb);
    plan.push_back(bad);
    plan.push_back(tree);

    const auto reports = run_benchmark(plan, ds, 7);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].classifier == "nb");
    CHECK(!reports[0].failed);
    CHECK(reports[0].accuracy_pct >= 90.0);  // separable synthetic data
    CHECK(reports[1].failed);
    CHECK(!reports[1].error.empty());
    CHECK(reports[2].classifier == "tree");
    CHECK(!reports[2].failed);
    CHECK(reports[0].n_train == reports[2].n_train);
    CHECK(reports[0].n_test == reports[2].n_test);
    CHECK(reports[0].seed == 7);

    const auto again = run_benchmark(plan, ds, 7);
    CHECK(again[0].accuracy_pct == reports[0].accuracy_pct);
    CHECK(again[2].accuracy_pct == reports[2].accuracy_pct);
}

TEST_CASE("no benchmark row outperforms a label-leaking memorizer") {
    const FeatureDataset tiny = synthetic_features(0.5, 48);

    // Memorizer oracle: exact-row lookup trained and tested on the same data.
    std::map<std::vector<double>, Activity> memo;
    for (std::size_t i = 0; i < tiny.rows.size(); ++i) memo[tiny.rows[i]] = tiny.labels[i];
    std::size_t hits = 0;
    for (std::size_t i = 0; i < tiny.rows.size(); ++i)
        if (memo.at(tiny.rows[i]) == tiny.labels[i]) ++hits;
    const double ceiling = 100.0 * static_cast<double>(hits) / static_cast<double>(tiny.rows.size());
    CHECK(ceiling == 100.0);

    for (const auto& r : run_benchmark(table3_plan(3), tiny, 3)) {
        REQUIRE(!r.failed);
        CHECK(r.accuracy_pct <= ceiling);
    }
}

TEST_CASE("report records round-trip through the JSON-lines form") {
    const FeatureDataset ds = synthetic_features(0.5, 52);
    const auto reports = run_benchmark({table3_plan(5)[0], table3_plan(5)[8]}, ds, 5);

    std::stringstream buf;
    write_report_records(reports, buf);
    const auto back = read_report_records(buf);
    REQUIRE(back.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(back[i].classifier == reports[i].classifier);
        CHECK(back[i].hyperparams == reports[i].hyperparams);
        CHECK(back[i].feature_subset == reports[i].feature_subset);
        CHECK(back[i].accuracy_pct == reports[i].accuracy_pct);
        CHECK(back[i].build_time_s == reports[i].build_time_s);
        CHECK(back[i].confusion == reports[i].confusion);
        CHECK(back[i].n_train == reports[i].n_train);
        CHECK(back[i].n_test == reports[i].n_test);
        CHECK(back[i].seed == reports[i].seed);
    }
}

TEST_CASE("the rendered table has a line per report plus a header") {
    const FeatureDataset ds = synthetic_features(0.5, 56);
    const auto reports = run_benchmark({table3_plan(2)[0]}, ds, 2);
    const std::string table = render_report_table(reports);
    CHECK(table.find("algorithm") != std::string::npos);
    CHECK(table.find("nb") != std::string::npos);
    CHECK(std::count(table.begin(), table.end(), '\n') == 2);
}
