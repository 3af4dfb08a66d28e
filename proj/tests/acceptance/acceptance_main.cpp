// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "har/csv.hpp"
#include "har/dft.hpp"
#include "har/eval.hpp"
#include "har/info_gain.hpp"
#include "har/median_filter.hpp"
#include "har/stream.hpp"
#include "har/synth.hpp"
#include "../oracles.hpp"

using namespace har;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    if (!ok) ++g_failures;
}

Window random_window(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-20, 20);
    Window w;
    for (double& v : w) v = dist(gen);
    return w;
}

FeatureDataset benchmark_features(std::uint64_t seed, double seconds_per_activity) {
    SynthParams p;
    p.seed = seed;
    return featurize(synthesize_all(seconds_per_activity, p));
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

}  // namespace

int main() {
    // 1. The seven statistics vs. independent brute-force formulas.
    criterion(1, "window statistics match brute-force formulas (1000 windows, <=1e-12 rel, <1s)",
              [](std::string& detail) {
                  Timer timer;
                  std::mt19937_64 gen(101);
                  double worst = 0.0;
                  for (int i = 0; i < 1000; ++i) {
                      const Window w = random_window(gen);
                      const WindowStats s = window_statistics(w);
                      worst = std::max({worst, oracle::rel_err(s.mean, oracle::mean(w)),
                                        oracle::rel_err(s.variance, oracle::variance(w)),
                                        oracle::rel_err(s.stddev, oracle::stddev(w)),
                                        oracle::rel_err(s.iqr, oracle::iqr8(w)),
                                        oracle::rel_err(s.energy, oracle::energy(w)),
                                        oracle::rel_err(s.kurtosis, oracle::kurtosis(w)),
                                        oracle::rel_err(s.skewness, oracle::skewness(w))});
                  }
                  const double elapsed = timer.seconds();
                  std::ostringstream os;
                  os << "max rel err " << worst << ", " << elapsed << " s";
                  detail = os.str();
                  return worst <= 1e-12 && elapsed < 1.0;
              });

    // 2. Algebraic identities across a 10,000-window corpus.
    criterion(2, "variance==energy-mean^2 (1e-9) and fenergy==8*energy (1e-6) on 10,000 windows",
              [](std::string& detail) {
                  SynthParams p;
                  p.seed = 202;
                  // 46 s per activity: 7 * floor(11500/8) = 10059 windows.
                  const FeatureDataset ds = featurize(synthesize_all(46.0, p));
                  if (ds.size() < 10000) {
                      detail = "corpus too small: " + std::to_string(ds.size());
                      return false;
                  }
                  double worst_var = 0.0, worst_parseval = 0.0;
                  for (const auto& row : ds.rows) {
                      for (int axis = 0; axis < 3; ++axis) {
                          const double mean = row[static_cast<std::size_t>(axis)];
                          const double variance = row[static_cast<std::size_t>(3 + axis)];
                          const double energy = row[static_cast<std::size_t>(18 + axis)];
                          const double fenergy = row[static_cast<std::size_t>(39 + axis)];
                          worst_var = std::max(worst_var,
                                               oracle::rel_err(variance, energy - mean * mean));
                          worst_parseval =
                              std::max(worst_parseval, oracle::rel_err(fenergy, 8.0 * energy));
                      }
                  }
                  std::ostringstream os;
                  os << ds.size() << " windows, worst variance identity " << worst_var
                     << ", worst Parseval " << worst_parseval;
                  detail = os.str();
                  return worst_var <= 1e-9 && worst_parseval <= 1e-6;
              });

    // 3. DFT magnitudes vs. the naive transform.
    criterion(3, "dft_magnitudes matches the naive DFT (1000 windows, <=1e-9 abs) and the cosine case",
              [](std::string& detail) {
                  std::mt19937_64 gen(303);
                  double worst = 0.0;
                  for (int i = 0; i < 1000; ++i) {
                      const Window w = random_window(gen);
                      const auto got = dft_magnitudes(w);
                      const auto want = oracle::naive_dft_magnitudes(w);
                      for (int k = 0; k < 8; ++k)
                          worst = std::max(worst, std::abs(got[static_cast<std::size_t>(k)] -
                                                           want[static_cast<std::size_t>(k)]));
                  }
                  Window cosw;
                  for (int n = 0; n < 8; ++n)
                      cosw[static_cast<std::size_t>(n)] =
                          std::cos(2.0 * std::numbers::pi * n / 8.0);
                  const auto mags = dft_magnitudes(cosw);
                  bool cosine_ok = true;
                  for (int k = 0; k < 8; ++k) {
                      const double want = (k == 1 || k == 7) ? 4.0 : 0.0;
                      cosine_ok &= std::abs(mags[static_cast<std::size_t>(k)] - want) <= 1e-9;
                  }
                  std::ostringstream os;
                  os << "max abs err " << worst << (cosine_ok ? "" : ", cosine bins wrong");
                  detail = os.str();
                  return worst <= 1e-9 && cosine_ok;
              });

    // 4. Median filter behavior.
    criterion(4, "median filter: width-3 spike removal, width-1 identity, range boundedness",
              [](std::string&) {
                  const std::vector<double> spike = {0, 10, 0, 10, 0};
                  if (median_filter(spike, 3) != std::vector<double>{0, 0, 10, 0, 0}) return false;
                  std::mt19937_64 gen(404);
                  std::uniform_real_distribution<double> dist(-50, 50);
                  for (int trial = 0; trial < 200; ++trial) {
                      std::vector<double> in(64);
                      for (double& v : in) v = dist(gen);
                      if (median_filter(in, 1) != in) return false;
                      const double lo = *std::min_element(in.begin(), in.end());
                      const double hi = *std::max_element(in.begin(), in.end());
                      for (int width : {3, 5, 9}) {
                          for (double v : median_filter(in, width))
                              if (v < lo || v > hi) return false;
                      }
                  }
                  return true;
              });

    // 5. Classifier thresholds on the 60 s/activity synthetic benchmark.
    const FeatureDataset bench = benchmark_features(505, 60.0);
    auto split = shuffle_split(bench, 0.7, 1);
    criterion(5, "synthetic benchmark: NB-42 >= 85%, forest >= 95%, 1-NN >= 90%, each < 30 s",
              [&](std::string& detail) {
                  std::ostringstream os;
                  os << bench.size() << " windows";
                  bool ok = true;

                  {
                      Timer t;
                      const auto nb = train_nb(split.first);
                      const double acc = evaluate(*nb, split.second).accuracy_pct;
                      const double el = t.seconds();
                      os << "; NB-42 " << format_accuracy(acc) << "% in " << el << " s";
                      ok &= acc >= 85.0 && el < 30.0;
                  }
                  {
                      Timer t;
                      ForestParams fp;
                      fp.seed = 1;
                      const auto forest = train_forest(split.first, fp);
                      const double acc = evaluate(*forest, split.second).accuracy_pct;
                      const double el = t.seconds();
                      os << "; forest " << format_accuracy(acc) << "% in " << el << " s";
                      ok &= acc >= 95.0 && el < 30.0;
                  }
                  {
                      Timer t;
                      const auto knn = train_knn(split.first);
                      const double acc = evaluate(*knn, split.second).accuracy_pct;
                      const double el = t.seconds();
                      os << "; 1-NN " << format_accuracy(acc) << "% in " << el << " s";
                      ok &= acc >= 90.0 && el < 30.0;
                  }
                  detail = os.str();
                  return ok;
              });

    // 6. Bounded degradation for the 10-feature subset.
    criterion(6, "NB on the table-3 row-1.2 subset loses < 10 accuracy points vs NB-42",
              [&](std::string& detail) {
                  const auto nb_full = train_nb(split.first);
                  const double acc_full = evaluate(*nb_full, split.second).accuracy_pct;
                  const auto nb_ten = train_nb(select_features(split.first, table3_subset("1.2")));
                  const double acc_ten = evaluate(*nb_ten, split.second).accuracy_pct;
                  std::ostringstream os;
                  os << "NB-42 " << format_accuracy(acc_full) << "%, NB-10 "
                     << format_accuracy(acc_ten) << "%";
                  detail = os.str();
                  return acc_ten > acc_full - 10.0;
              });

    // 7. Information gain properties.
    criterion(7, "info gain: perfect balanced split = 1 bit, gains within [0, H], shuffle-invariant",
              [](std::string&) {
                  FeatureDataset ds;
                  ds.feature_names = {"f"};
                  ds.rows = {{0}, {0}, {1}, {1}};
                  ds.labels = {Activity::Idle, Activity::Idle, Activity::Running, Activity::Running};
                  if (rank_features_info_gain(ds)[0].info_gain != 1.0) return false;

                  SynthParams p;
                  p.seed = 707;
                  const FeatureDataset feats = featurize(synthesize_all(1.0, p));
                  std::array<std::int64_t, kActivityCount> counts{};
                  for (Activity a : feats.labels) counts[static_cast<std::size_t>(activity_code(a))]++;
                  const double h = entropy_bits(counts, static_cast<std::int64_t>(feats.labels.size()));
                  const auto ranked = rank_features_info_gain(feats);
                  for (const RankedFeature& rf : ranked)
                      if (rf.info_gain < 0.0 || rf.info_gain > h + 1e-12) return false;

                  FeatureDataset shuffled = feats;
                  std::mt19937_64 gen(708);
                  std::vector<std::size_t> order(feats.rows.size());
                  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                  std::shuffle(order.begin(), order.end(), gen);
                  for (std::size_t i = 0; i < order.size(); ++i) {
                      shuffled.rows[i] = feats.rows[order[i]];
                      shuffled.labels[i] = feats.labels[order[i]];
                  }
                  const auto ranked2 = rank_features_info_gain(shuffled);
                  for (std::size_t i = 0; i < ranked.size(); ++i) {
                      if (ranked[i].name != ranked2[i].name) return false;
                      if (oracle::rel_err(ranked2[i].info_gain, ranked[i].info_gain) > 1e-12)
                          return false;
                  }
                  return true;
              });

    // 8. Vote and calorie arithmetic.
    criterion(8, "majority vote matches the histogram oracle (10,000 buffers); calorie formula exact",
              [](std::string&) {
                  std::mt19937_64 gen(808);
                  std::uniform_int_distribution<int> code(0, 6);
                  for (int trial = 0; trial < 10000; ++trial) {
                      std::vector<Activity> votes(10);
                      for (Activity& v : votes) v = static_cast<Activity>(code(gen));
                      if (majority_vote(votes) != oracle::histogram_mode(votes)) return false;
                  }
                  const double kcal = calories(Activity::Running, 2.0, 70.0);
                  if (std::abs(kcal - 70.0 * 14.5 * 2.0 / 3600.0) > 1e-9) return false;
                  if (std::abs(kcal - 0.5638888888888889) > 1e-9) return false;

                  SynthParams p;
                  p.seed = 809;
                  const auto model = train_nb(featurize(synthesize_all(1.0, p)));
                  const auto events = run_stream(synthesize_all(1.0, p), *model, StreamConfig{});
                  double total = 0.0;
                  for (const RecognitionEvent& e : events) {
                      total += e.kcal_delta;
                      if (e.kcal_total != total) return false;
                  }
                  return !events.empty();
              });

    // 9. End-to-end streaming recognition.
    criterion(9, "streamed homogeneous segments >= 90% decision accuracy; rate 0 == rate 1 values",
              [](std::string& detail) {
                  SynthParams train_params;
                  train_params.seed = 901;
                  const auto model = train_nb(featurize(synthesize_all(20.0, train_params)));

                  SynthParams replay_params;
                  replay_params.seed = 902;
                  StreamConfig cfg;
                  std::size_t correct = 0, total = 0;
                  for (Activity a : kAllActivities) {
                      const LabeledSeries seg = synthesize(a, 4.0, replay_params);
                      for (const RecognitionEvent& e : run_stream(seg, *model, cfg)) {
                          ++total;
                          correct += e.activity == a ? 1 : 0;
                      }
                  }
                  const double acc = 100.0 * static_cast<double>(correct) / static_cast<double>(total);

                  // Rate independence on a short segment (~1.6 s wall at rate 1).
                  const LabeledSeries seg = synthesize(Activity::NormalWalking, 1.6, replay_params);
                  LabeledSeries unlabeled = seg;
                  unlabeled.labels.clear();
                  const auto csv_path = std::filesystem::temp_directory_path() /
                                        ("har_accept_" + std::to_string(::getpid()) + ".csv");
                  write_csv_file(unlabeled, csv_path.string());
                  const auto fast = replay_stream(csv_path.string(), *model, cfg, 0.0);
                  const auto paced = replay_stream(csv_path.string(), *model, cfg, 1.0);
                  std::filesystem::remove(csv_path);
                  bool same = fast.size() == paced.size() && !fast.empty();
                  for (std::size_t i = 0; same && i < fast.size(); ++i)
                      same = fast[i].activity == paced[i].activity &&
                             fast[i].kcal_delta == paced[i].kcal_delta &&
                             fast[i].kcal_total == paced[i].kcal_total &&
                             fast[i].votes == paced[i].votes &&
                             fast[i].elapsed_s == paced[i].elapsed_s;

                  std::ostringstream os;
                  os << total << " decisions, " << format_accuracy(acc) << "% correct; rate parity "
                     << (same ? "ok" : "BROKEN");
                  detail = os.str();
                  return acc >= 90.0 && same;
              });

    // 10. Bit-reproducibility of every seeded stage.
    criterion(10, "seeded stages (synth, split, forest, bagging, stream) are bit-reproducible",
              [](std::string&) {
                  SynthParams p;
                  p.seed = 1001;
                  const LabeledSeries s1 = synthesize_all(1.0, p);
                  const LabeledSeries s2 = synthesize_all(1.0, p);
                  if (!(s1 == s2)) return false;

                  std::ostringstream csv1, csv2;
                  write_csv(s1, csv1);
                  write_csv(s2, csv2);
                  if (csv1.str() != csv2.str()) return false;

                  const FeatureDataset ds = featurize(s1);
                  const auto split_a = shuffle_split(ds, 0.7, 5);
                  const auto split_b = shuffle_split(ds, 0.7, 5);
                  if (split_a.first.rows != split_b.first.rows) return false;
                  if (split_a.second.rows != split_b.second.rows) return false;

                  ForestParams fp;
                  fp.n_trees = 8;
                  fp.seed = 6;
                  const auto f1 = train_forest(split_a.first, fp);
                  const auto f2 = train_forest(split_b.first, fp);
                  BaggingParams bp;
                  bp.n_bags = 4;
                  bp.seed = 6;
                  const auto b1 = train_bagging(split_a.first, bp);
                  const auto b2 = train_bagging(split_b.first, bp);
                  std::ostringstream m1, m2;
                  save_model(*f1, m1);
                  save_model(*b1, m2);
                  std::ostringstream m1b, m2b;
                  save_model(*f2, m1b);
                  save_model(*b2, m2b);
                  // Serialized form includes every parameter except wall-clock
                  // build time; strip it before comparing.
                  auto strip_time = [](std::string s) {
                      const auto pos = s.find("\"build_time_s\":");
                      const auto end = s.find(',', pos);
                      return s.erase(pos, end - pos + 1);
                  };
                  if (strip_time(m1.str()) != strip_time(m1b.str())) return false;
                  if (strip_time(m2.str()) != strip_time(m2b.str())) return false;

                  const auto model = train_nb(ds);
                  const auto e1 = run_stream(s1, *model, StreamConfig{});
                  const auto e2 = run_stream(s2, *model, StreamConfig{});
                  if (e1.size() != e2.size() || e1.empty()) return false;
                  for (std::size_t i = 0; i < e1.size(); ++i) {
                      std::ostringstream j1, j2;
                      write_event_jsonl(e1[i], j1);
                      write_event_jsonl(e2[i], j2);
                      if (j1.str() != j2.str()) return false;
                  }
                  return true;
              });

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(g_failures) + " CRITERIA FAILED")
              << '\n';
    return g_failures;
}
