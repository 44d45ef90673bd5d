"""Corpus evaluation: positive and sampled-negative matching per pair.

Every corpus pair is matched against its own situation (should match) and
against the situation of a seeded randomly drawn *different* rule (should
not match). Counts and derived metrics keep "undefined" distinct from zero:
a ratio with an empty denominator is reported as None, never silently 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..amr.document import AlignedAmrDocument, build_document_tree
from ..errors import AmrReasonerError, EmptyInput, UndefinedCollapsability
from ..logic.convert import VerdictLexicon
from ..merge import MergeTreeSet, collapsability, enumerate_merge_trees
from .match import MatchConfig, match_tree_sets


@dataclass(frozen=True)
class CorpusPair:
    pair_id: str
    rot: AlignedAmrDocument
    sst: AlignedAmrDocument


def load_corpus(directory: str | Path) -> tuple[CorpusPair, ...]:
    """Load ``<id>.rot.json`` / ``<id>.sst.json`` pairs, sorted by id."""
    directory = Path(directory)
    pairs = []
    for rot_path in sorted(directory.glob("*.rot.json")):
        pair_id = rot_path.name[: -len(".rot.json")]
        sst_path = directory / f"{pair_id}.sst.json"
        if not sst_path.exists():
            raise EmptyInput(f"rule document {rot_path.name} has no matching {sst_path.name}")
        pairs.append(
            CorpusPair(
                pair_id=pair_id,
                rot=AlignedAmrDocument.load(rot_path),
                sst=AlignedAmrDocument.load(sst_path),
            )
        )
    if not pairs:
        raise EmptyInput(f"no *.rot.json documents under {directory}")
    return tuple(pairs)


@dataclass(frozen=True)
class EvalRecord:
    pair_id: str
    error: str | None = None
    matched: bool | None = None
    similarity: float | None = None
    negative_id: str | None = None
    negative_matched: bool | None = None
    negative_similarity: float | None = None
    collapsability_rot: float | None = None
    collapsability_sst: float | None = None


@dataclass(frozen=True)
class EvalMetrics:
    true_positives: int
    false_negatives: int
    false_positives: int
    true_negatives: int
    errors: int
    precision: float | None
    recall: float | None
    f1: float | None
    accuracy: float | None


@dataclass(frozen=True)
class EvalRun:
    records: tuple[EvalRecord, ...]
    metrics: EvalMetrics


def compute_metrics(records: tuple[EvalRecord, ...] | list[EvalRecord]) -> EvalMetrics:
    tp = sum(1 for r in records if r.matched is True)
    fn = sum(1 for r in records if r.matched is False)
    fp = sum(1 for r in records if r.negative_matched is True)
    tn = sum(1 for r in records if r.negative_matched is False)
    errors = sum(1 for r in records if r.error is not None)
    precision = tp / (tp + fp) if tp + fp else None
    recall = tp / (tp + fn) if tp + fn else None
    if precision is None or recall is None or precision + recall == 0:
        f1 = None
    else:
        f1 = 2 * precision * recall / (precision + recall)
    total = tp + fn + fp + tn
    accuracy = (tp + tn) / total if total else None
    return EvalMetrics(
        true_positives=tp,
        false_negatives=fn,
        false_positives=fp,
        true_negatives=tn,
        errors=errors,
        precision=precision,
        recall=recall,
        f1=f1,
        accuracy=accuracy,
    )


def draw_negative(seed: int, index: int, count: int) -> int:
    """Index of the rule paired against situation ``index`` as a negative.

    Seeded per (seed, index), so each sample is reproducible regardless of
    evaluation order, and never equal to ``index`` itself.
    """
    if count < 2:
        raise EmptyInput("negative sampling needs at least two corpus pairs")
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    drawn = int(rng.integers(count - 1))
    if drawn >= index:
        drawn += 1
    return drawn


def _safe_collapsability(tree_set: MergeTreeSet) -> float | None:
    try:
        return collapsability(tree_set)
    except UndefinedCollapsability:
        return None


def evaluate(
    pairs: tuple[CorpusPair, ...] | list[CorpusPair],
    lexicon: VerdictLexicon,
    config: MatchConfig | None = None,
    seed: int = 0,
) -> EvalRun:
    """Match every pair positively and against one sampled negative rule.

    Per-pair failures (bad documents, enumeration caps) become records with
    an ``error`` field instead of aborting the run.
    """
    config = config or MatchConfig()
    ordered = sorted(pairs, key=lambda pair: pair.pair_id)

    built: list[tuple[MergeTreeSet, MergeTreeSet] | str] = []
    for pair in ordered:
        try:
            rot_set = enumerate_merge_trees(build_document_tree(pair.rot), config.merge)
            sst_set = enumerate_merge_trees(build_document_tree(pair.sst), config.merge)
            built.append((rot_set, sst_set))
        except AmrReasonerError as error:
            built.append(f"{type(error).__name__}: {error}")

    records: list[EvalRecord] = []
    for index, pair in enumerate(ordered):
        if isinstance(built[index], str):
            records.append(EvalRecord(pair_id=pair.pair_id, error=built[index]))
            continue
        rot_set, sst_set = built[index]
        positive = match_tree_sets(rot_set, sst_set, lexicon, config)

        negative_id = None
        negative_matched = None
        negative_similarity = None
        if len(ordered) >= 2:
            drawn = draw_negative(seed, index, len(ordered))
            negative_id = ordered[drawn].pair_id
            if not isinstance(built[drawn], str):
                other_rot_set, _ = built[drawn]
                negative = match_tree_sets(other_rot_set, sst_set, lexicon, config)
                negative_matched = negative.matched
                negative_similarity = negative.similarity

        records.append(
            EvalRecord(
                pair_id=pair.pair_id,
                matched=positive.matched,
                similarity=positive.similarity,
                negative_id=negative_id,
                negative_matched=negative_matched,
                negative_similarity=negative_similarity,
                collapsability_rot=_safe_collapsability(rot_set),
                collapsability_sst=_safe_collapsability(sst_set),
            )
        )
    return EvalRun(records=tuple(records), metrics=compute_metrics(records))


@dataclass(frozen=True)
class BucketMetrics:
    """Metrics over the records whose pair collapsability falls in a range.

    A record's bucket value is the smaller of its rule and situation
    collapsabilities; records with an undefined value are left out.
    """

    label: str
    lower: float
    upper: float | None
    records: int
    metrics: EvalMetrics


def bucket_by_collapsability(
    records: tuple[EvalRecord, ...] | list[EvalRecord],
    edges: list[float] | tuple[float, ...],
) -> tuple[BucketMetrics, ...]:
    """Split records into collapsability ranges cut at ``edges``.

    Edges must be strictly increasing within (0, 1); they cut [0, 1] into
    ``len(edges) + 1`` buckets, the last closed at 1. No edges means one
    bucket spanning [0, 1].
    """
    edges = list(edges)
    if any(not 0.0 < e < 1.0 for e in edges) or edges != sorted(set(edges)):
        raise ValueError("bucket edges must be strictly increasing values in (0, 1)")
    lows = [0.0, *edges]
    buckets = []
    for position, low in enumerate(lows):
        high = edges[position] if position < len(edges) else None
        members = []
        for record in records:
            if record.collapsability_rot is None or record.collapsability_sst is None:
                continue
            value = min(record.collapsability_rot, record.collapsability_sst)
            if value >= low and (high is None or value < high):
                members.append(record)
        label = f"[{low:.2f},{high:.2f})" if high is not None else f"[{low:.2f},1.00]"
        buckets.append(
            BucketMetrics(
                label=label,
                lower=low,
                upper=high,
                records=len(members),
                metrics=compute_metrics(members),
            )
        )
    return tuple(buckets)
