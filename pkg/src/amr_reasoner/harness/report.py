"""Delimited reports and matplotlib figures for evaluation runs.

Every report is a tab-separated file headed by ``# key=value`` comment lines
echoing the run configuration, so a report is self-describing. Undefined
values (empty denominators, missing similarities) render as ``undefined``,
never as zero. Figures render through the Agg backend straight to files.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evaluate import BucketMetrics, EvalMetrics, EvalRecord
from .stats import STAT_NAMES, StatSummary
from .sweep import SweepPoint

UNDEFINED = "undefined"

RECORD_COLUMNS = (
    "pair_id",
    "matched",
    "similarity",
    "negative_id",
    "negative_matched",
    "negative_similarity",
    "collapsability_rot",
    "collapsability_sst",
    "error",
)

METRIC_COLUMNS = (
    "true_positives",
    "false_negatives",
    "false_positives",
    "true_negatives",
    "errors",
    "precision",
    "recall",
    "f1",
    "accuracy",
)


def format_cell(value: object) -> str:
    if value is None:
        return UNDEFINED
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def write_delimited(
    path: str | Path,
    meta: dict[str, object],
    columns: tuple[str, ...] | list[str],
    rows: list[tuple] | list[list],
) -> Path:
    path = Path(path)
    lines = [f"# {key}={format_cell(value)}" for key, value in meta.items()]
    lines.append("\t".join(columns))
    for row in rows:
        lines.append("\t".join(format_cell(cell) for cell in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def record_rows(records: tuple[EvalRecord, ...] | list[EvalRecord]) -> list[tuple]:
    return [
        (
            r.pair_id,
            r.matched,
            r.similarity,
            r.negative_id,
            r.negative_matched,
            r.negative_similarity,
            r.collapsability_rot,
            r.collapsability_sst,
            r.error,
        )
        for r in records
    ]


def metric_row(metrics: EvalMetrics) -> tuple:
    return (
        metrics.true_positives,
        metrics.false_negatives,
        metrics.false_positives,
        metrics.true_negatives,
        metrics.errors,
        metrics.precision,
        metrics.recall,
        metrics.f1,
        metrics.accuracy,
    )


def _save(figure: plt.Figure, path: str | Path) -> Path:
    path = Path(path)
    figure.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(figure)
    return path


def render_metrics_figure(metrics: EvalMetrics, path: str | Path) -> Path:
    figure, (left, right) = plt.subplots(1, 2, figsize=(9, 4))
    counts = [
        metrics.true_positives,
        metrics.false_negatives,
        metrics.false_positives,
        metrics.true_negatives,
    ]
    left.bar(["TP", "FN", "FP", "TN"], counts, color="tab:blue")
    left.set_title("Outcome counts")
    left.set_ylabel("pairs")
    names = ["precision", "recall", "f1", "accuracy"]
    values = [metrics.precision, metrics.recall, metrics.f1, metrics.accuracy]
    defined = [(n, v) for n, v in zip(names, values) if v is not None]
    if defined:
        right.bar([n for n, _ in defined], [v for _, v in defined], color="tab:orange")
    right.set_ylim(0.0, 1.05)
    right.set_title("Derived metrics")
    figure.tight_layout()
    return _save(figure, path)


def render_sweep_figure(axis: str, points: tuple[SweepPoint, ...], path: str | Path) -> Path:
    figure, ax = plt.subplots(figsize=(7, 4.5))
    xs = [p.value for p in points]
    for name in ("precision", "recall", "f1", "accuracy"):
        ys = [getattr(p.metrics, name) for p in points]
        ax.plot(
            [x for x, y in zip(xs, ys) if y is not None],
            [y for y in ys if y is not None],
            marker="o",
            label=name,
        )
    ax.set_xlabel(axis)
    ax.set_ylabel("score")
    ax.set_ylim(0.0, 1.05)
    ax.set_title(f"Metrics while sweeping {axis}")
    ax.legend()
    figure.tight_layout()
    return _save(figure, path)


def render_bucket_figure(buckets: tuple[BucketMetrics, ...], path: str | Path) -> Path:
    figure, ax = plt.subplots(figsize=(7, 4.5))
    labels = [b.label for b in buckets]
    recalls = [b.metrics.recall if b.metrics.recall is not None else 0.0 for b in buckets]
    bars = ax.bar(labels, recalls, color="tab:green")
    for bar, bucket in zip(bars, buckets):
        note = "n/a" if bucket.metrics.recall is None else f"{bucket.metrics.recall:.2f}"
        ax.annotate(
            f"{note}\n({bucket.records})",
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    ax.set_xlabel("collapsability bucket")
    ax.set_ylabel("recall")
    ax.set_ylim(0.0, 1.15)
    ax.set_title("Recall by collapsability")
    figure.tight_layout()
    return _save(figure, path)


def render_stats_figure(groups: dict[str, dict[str, StatSummary]], path: str | Path) -> Path:
    figure, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.8 / max(len(groups), 1)
    for offset, (group, stats) in enumerate(sorted(groups.items())):
        positions = [i + offset * width for i in range(len(STAT_NAMES))]
        means = [stats[name].mean for name in STAT_NAMES]
        stds = [stats[name].std for name in STAT_NAMES]
        ax.bar(positions, means, width=width, yerr=stds, capsize=3, label=group)
    ax.set_xticks([i + width * (len(groups) - 1) / 2 for i in range(len(STAT_NAMES))])
    ax.set_xticklabels(STAT_NAMES, rotation=15)
    ax.set_ylabel("mean (error bars: population stdev)")
    ax.set_title("Corpus statistics")
    ax.legend()
    figure.tight_layout()
    return _save(figure, path)
