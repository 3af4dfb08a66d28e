"""Smoke tests for the python bindings."""

import math

import pytest

import har_pipeline as hp


def test_feature_names():
    names = hp.feature_names()
    assert len(names) == 42
    assert names[0] == "meanaccx"
    assert names[21] == "fmeanaccx"
    assert len(set(names)) == 42


def test_synthesize_is_deterministic():
    a = hp.synthesize("running", 1.0, seed=7)
    b = hp.synthesize("running", 1.0, seed=7)
    assert len(a) == 250
    assert a.samples == b.samples
    assert set(a.labels) == {5}
    c = hp.synthesize("running", 1.0, seed=8)
    assert a.samples != c.samples


def test_median_filter_and_dft():
    assert hp.median_filter([0, 10, 0, 10, 0], 3) == [0, 0, 10, 0, 0]
    mags = hp.dft_magnitudes([2.0] * 8)
    assert mags[0] == pytest.approx(16.0)
    assert max(mags[1:]) == pytest.approx(0.0, abs=1e-12)


def test_window_statistics():
    stats = hp.window_statistics([1, 1, 1, 1, 3, 3, 3, 3])
    assert stats["mean"] == pytest.approx(2.0)
    assert stats["variance"] == pytest.approx(1.0)
    assert stats["energy"] == pytest.approx(5.0)
    assert stats["iqr"] == pytest.approx(2.0)
    assert stats["kurtosis"] == pytest.approx(1.0)
    assert stats["skewness"] == pytest.approx(0.0)


def test_csv_round_trip(tmp_path):
    series = hp.synthesize("jogging", 0.5, seed=3)
    path = tmp_path / "jog.csv"
    hp.write_csv(series, str(path))
    back = hp.read_csv(str(path))
    assert back.samples == series.samples
    assert back.labels == series.labels


def test_featurize_and_training(tmp_path):
    series = hp.synthesize("all", 2.0, seed=5)
    ds = hp.featurize(series)
    assert len(ds) == len(series) // 8
    assert ds.feature_names == hp.feature_names()

    train, test = hp.shuffle_split(ds, 0.7, seed=1)
    model = hp.train_nb(train)
    report = hp.evaluate(model, test)
    assert report.accuracy_pct > 80.0
    assert report.n_test == len(test)
    assert sum(sum(row) for row in report.confusion) == report.n_test

    path = tmp_path / "nb.model"
    model.save(str(path))
    loaded = hp.load_model(str(path))
    assert loaded.kind == "nb"
    for row in test.rows[:25]:
        assert loaded.predict(row) == model.predict(row)


def test_subset_selection_and_ranking():
    ds = hp.featurize(hp.synthesize("all", 1.0, seed=9))
    ranked = hp.rank_features_info_gain(ds)
    assert len(ranked) == 42
    assert all(gain >= 0.0 for _, gain in ranked)
    assert ranked[0][1] == max(g for _, g in ranked)

    ten = hp.select_features(ds, hp.table3_subset("1.2"))
    assert len(ten.feature_names) == 10
    assert len(ten) == len(ds)


def test_vote_and_calories():
    assert hp.majority_vote([2, 2, 3, 2, 5, 2, 2, 3, 2, 2]) == 2
    assert hp.majority_vote([1, 1, 1, 1, 1, 4, 4, 4, 4, 4]) == 1
    assert hp.calories(5, 2.0, 70.0) == pytest.approx(70 * 14.5 * 2 / 3600, rel=1e-12)
    assert hp.met_value(0) == 1.3
    with pytest.raises(ValueError):
        hp.calories(0, 1.0, 0.0)


def test_streaming(tmp_path):
    model = hp.train_nb(hp.featurize(hp.synthesize("all", 2.0, seed=11)))
    series = hp.synthesize("fast_walking", 1.6, seed=12)
    events = hp.run_stream(series, model, weight_kg=60.0)
    assert len(events) == len(series) // 80
    total = 0.0
    for e in events:
        total += e.kcal_delta
        assert e.kcal_total == pytest.approx(total, rel=1e-12)
        assert sum(e.votes) == 10
        assert e.elapsed_s == pytest.approx(80 / 250)

    path = tmp_path / "replay.csv"
    hp.write_csv(series, str(path))
    replayed = hp.replay_stream(str(path), model, rate_multiplier=0.0, weight_kg=60.0)
    assert [e.activity for e in replayed] == [e.activity for e in events]
    assert [e.kcal_total for e in replayed] == [e.kcal_total for e in events]


def test_benchmark_roster():
    ds = hp.featurize(hp.synthesize("all", 1.0, seed=13))
    reports = hp.run_table3_benchmark(ds, seed=2)
    assert len(reports) == 9
    assert [r.classifier for r in reports] == [
        "nb", "nb", "tree", "tree", "forest", "forest", "bagging", "bagging", "knn",
    ]
    assert all(not r.failed for r in reports)
    table = hp.render_report_table(reports)
    assert table.count("\n") == 10
