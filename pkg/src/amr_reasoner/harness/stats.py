"""Descriptive statistics over a corpus of trees."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..amr.tree import AmrTree, Instance, Merge
from ..errors import EmptyInput
from ..merge import MergeConfig, enumerate_merge_trees

STAT_NAMES = ("instance_nodes", "max_depth", "logic_terms", "merge_trees")


@dataclass(frozen=True)
class StatSummary:
    mean: float
    median: float
    std: float


def logic_term_count(tree: AmrTree) -> int:
    """Number of literals the tree produces in logical form.

    One concept literal per instance or merge node plus one role literal per
    edge, except polarity edges, which surface as negation rather than as
    literals of their own.
    """
    concepts = sum(1 for node in tree.nodes.values() if isinstance(node, (Instance, Merge)))
    roles = sum(1 for edge in tree.edges if edge.role != ":polarity")
    return concepts + roles


def dataset_stats(
    trees: list[AmrTree] | tuple[AmrTree, ...],
    config: MergeConfig | None = None,
) -> dict[str, StatSummary]:
    """Mean/median/population-stdev of per-tree size measures.

    ``merge_trees`` counts every distinct tree reachable by merging,
    including the unmerged original.
    """
    if not trees:
        raise EmptyInput("no trees to summarize")
    config = config or MergeConfig()
    samples: dict[str, list[float]] = {name: [] for name in STAT_NAMES}
    for tree in trees:
        samples["instance_nodes"].append(len(tree.instance_ids()))
        samples["max_depth"].append(tree.max_depth())
        samples["logic_terms"].append(logic_term_count(tree))
        samples["merge_trees"].append(len(enumerate_merge_trees(tree, config)))
    return {
        name: StatSummary(
            mean=float(np.mean(values)),
            median=float(np.median(values)),
            std=float(np.std(values)),
        )
        for name, values in samples.items()
    }
