"""Re-running the evaluation while one knob moves across a range."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from ..logic.convert import VerdictLexicon
from .evaluate import CorpusPair, EvalMetrics, evaluate
from .match import MatchConfig

AXES = ("threshold", "max-width")


@dataclass(frozen=True)
class SweepPoint:
    value: float
    metrics: EvalMetrics


def parse_sweep_spec(spec: str) -> tuple[str, list[float]]:
    """Parse ``axis=lo:hi:step`` into an axis name and inclusive value list."""
    axis, separator, range_text = spec.partition("=")
    if not separator or axis not in AXES:
        raise ValueError(f"sweep spec must look like axis=lo:hi:step with axis in {AXES}")
    parts = range_text.split(":")
    if len(parts) != 3:
        raise ValueError("sweep range must be lo:hi:step")
    try:
        low, high, step = (float(part) for part in parts)
    except ValueError as error:
        raise ValueError(f"sweep range values must be numbers: {range_text}") from error
    if step <= 0 or high < low:
        raise ValueError("sweep range needs step > 0 and hi >= lo")
    values = []
    value = low
    while value <= high + 1e-9:
        values.append(round(value, 10))
        value += step
    return axis, values


def _configured(base: MatchConfig, axis: str, value: float) -> MatchConfig:
    if axis == "threshold":
        prover = dataclasses.replace(base.prover, similarity_threshold=value)
        return dataclasses.replace(base, prover=prover)
    merge = dataclasses.replace(base.merge, max_merge_width=int(value))
    return dataclasses.replace(base, merge=merge)


def sweep_axis(
    pairs: tuple[CorpusPair, ...] | list[CorpusPair],
    lexicon: VerdictLexicon,
    base: MatchConfig,
    seed: int,
    axis: str,
    values: list[float],
) -> tuple[SweepPoint, ...]:
    """Evaluate the corpus once per value, same seed throughout."""
    points = []
    for value in values:
        run = evaluate(pairs, lexicon, _configured(base, axis, value), seed)
        points.append(SweepPoint(value=value, metrics=run.metrics))
    return tuple(points)
