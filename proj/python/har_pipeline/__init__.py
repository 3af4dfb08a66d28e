"""Accelerometer activity recognition pipeline bound from the C++ core."""

from ._core import (
    Activity,
    EvaluationReport,
    FeatureDataset,
    LabeledSeries,
    RecognitionEvent,
    TrainedModel,
    activity_code,
    activity_name,
    calories,
    dft_magnitudes,
    evaluate,
    feature_names,
    featurize,
    load_model,
    majority_vote,
    median_filter,
    met_value,
    rank_features_info_gain,
    read_csv,
    read_feature_csv,
    render_report_table,
    replay_stream,
    run_stream,
    run_table3_benchmark,
    select_features,
    shuffle_split,
    synthesize,
    table3_subset,
    train_bagging,
    train_forest,
    train_knn,
    train_nb,
    train_tree,
    window_statistics,
    write_csv,
    write_feature_csv,
)

__all__ = [
    "Activity",
    "EvaluationReport",
    "FeatureDataset",
    "LabeledSeries",
    "RecognitionEvent",
    "TrainedModel",
    "activity_code",
    "activity_name",
    "calories",
    "dft_magnitudes",
    "evaluate",
    "feature_names",
    "featurize",
    "load_model",
    "majority_vote",
    "median_filter",
    "met_value",
    "rank_features_info_gain",
    "read_csv",
    "read_feature_csv",
    "render_report_table",
    "replay_stream",
    "run_stream",
    "run_table3_benchmark",
    "select_features",
    "shuffle_split",
    "synthesize",
    "table3_subset",
    "train_bagging",
    "train_forest",
    "train_knn",
    "train_nb",
    "train_tree",
    "window_statistics",
    "write_csv",
    "write_feature_csv",
]
