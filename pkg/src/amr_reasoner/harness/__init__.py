"""Matching, evaluation, sweeps, statistics, and report rendering."""

from .evaluate import (
    BucketMetrics,
    CorpusPair,
    EvalMetrics,
    EvalRecord,
    EvalRun,
    bucket_by_collapsability,
    compute_metrics,
    draw_negative,
    evaluate,
    load_corpus,
)
from .match import MatchConfig, MatchResult, match_tree_sets, match_trees
from .report import render_metrics_figure, render_stats_figure, render_sweep_figure, write_delimited
from .stats import StatSummary, dataset_stats, logic_term_count
from .sweep import SweepPoint, parse_sweep_spec, sweep_axis

__all__ = [
    "BucketMetrics",
    "CorpusPair",
    "EvalMetrics",
    "EvalRecord",
    "EvalRun",
    "MatchConfig",
    "MatchResult",
    "StatSummary",
    "SweepPoint",
    "bucket_by_collapsability",
    "compute_metrics",
    "dataset_stats",
    "draw_negative",
    "evaluate",
    "load_corpus",
    "logic_term_count",
    "match_tree_sets",
    "match_trees",
    "parse_sweep_spec",
    "render_metrics_figure",
    "render_stats_figure",
    "render_sweep_figure",
    "sweep_axis",
    "write_delimited",
]
