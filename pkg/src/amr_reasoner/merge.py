"""Collapsing subtrees into merge nodes and enumerating merged variants.

A merge replaces an instance node and everything below it with a single
merge node whose embedding is the mean of the embedded nodes it swallowed
and whose width records how many embeddings went into that mean. A merge is
only allowed when it cannot change the logical reading of the rest of the
tree: the collapsed region must contain no negation, must not split a
coreference between inside and outside, and must respect the configured
width and depth bounds.

Enumeration produces every tree reachable by any number of such merges.
Because a merge may never contain another merge node, every reachable tree
corresponds to an antichain of merge targets on the original tree (no target
an ancestor of another), which is what the enumerator walks directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .amr.tree import AmrTree, Constant, Coreference, Instance, Merge
from .errors import (
    InvalidMerge,
    NoEmbeddings,
    ResourceCapExceeded,
    UndefinedCollapsability,
)
from .similarity import average_embeddings


@dataclass(frozen=True)
class MergeConfig:
    max_merge_width: int = 6
    min_merge_depth: int = 1
    strict_min_depth: bool = False
    max_variants: int = 10_000

    def __post_init__(self) -> None:
        if self.max_merge_width < 1:
            raise ValueError("max_merge_width must be positive")
        if self.min_merge_depth < 0:
            raise ValueError("min_merge_depth must be non-negative")
        if self.max_variants < 1:
            raise ValueError("max_variants must be positive")


def merge_width(tree: AmrTree, target: int) -> int:
    """Number of embedded nodes in the subtree rooted at ``target``."""
    count = 0
    for nid in tree.subtree_ids(target):
        node = tree.nodes[nid]
        if isinstance(node, (Instance, Constant)) and node.embedding is not None:
            count += 1
    return count


def _structural_error(tree: AmrTree, target: int, config: MergeConfig) -> str | None:
    """Reason the subtree at ``target`` cannot be collapsed, or None."""
    node = tree.nodes.get(target)
    if not isinstance(node, Instance):
        return f"merge target {target} is not an instance node"
    depth = tree.depth(target)
    deep_enough = depth > config.min_merge_depth if config.strict_min_depth else depth >= config.min_merge_depth
    if not deep_enough:
        comparison = ">" if config.strict_min_depth else ">="
        return f"depth {depth} of node {target} is not {comparison} {config.min_merge_depth}"
    inside = set(tree.subtree_ids(target))
    labels_inside: set[str] = set()
    for nid in inside:
        member = tree.nodes[nid]
        if isinstance(member, Merge):
            return "merged subtrees cannot contain merge nodes"
        if isinstance(member, Instance):
            labels_inside.add(member.label)
        if isinstance(member, Coreference) and tree.instance_by_label(member.label) not in inside:
            return f"coreference '{member.label}' inside the merge points to an instance outside it"
    for edge in tree.edges:
        if edge.source not in inside:
            continue
        edge_target = tree.nodes[edge.target]
        if edge.role == ":polarity" and isinstance(edge_target, Constant) and edge_target.label == "-":
            return "merged subtrees cannot contain negation"
    for label in labels_inside:
        if any(nid not in inside for nid in tree.coreference_ids(label)):
            return f"instance '{label}' inside the merge is referenced outside it"
    return None


def is_valid_merge(tree: AmrTree, target: int, config: MergeConfig) -> bool:
    if _structural_error(tree, target, config) is not None:
        return False
    return 1 <= merge_width(tree, target) <= config.max_merge_width


def apply_merge(tree: AmrTree, target: int, config: MergeConfig) -> AmrTree:
    """Collapse the subtree at ``target`` into a single merge node.

    The merge node reuses the target's node id, so ids elsewhere in the tree
    stay stable across successive merges.
    """
    error = _structural_error(tree, target, config)
    if error is not None:
        raise InvalidMerge(error)
    inside = set(tree.subtree_ids(target))
    embeddings = [
        node.embedding
        for nid in tree.subtree_ids(target)
        if isinstance(node := tree.nodes[nid], (Instance, Constant)) and node.embedding is not None
    ]
    if not embeddings:
        raise NoEmbeddings(f"subtree at node {target} has no embedded nodes to merge")
    if len(embeddings) > config.max_merge_width:
        raise InvalidMerge(
            f"merge width {len(embeddings)} exceeds the maximum {config.max_merge_width}"
        )
    merged = Merge(embedding=average_embeddings(embeddings), width=len(embeddings))
    nodes = {nid: node for nid, node in tree.nodes.items() if nid not in inside}
    nodes[target] = merged
    edges = [edge for edge in tree.edges if edge.source not in inside]
    return AmrTree(nodes, edges, tree.root)


@dataclass(frozen=True)
class MergeTreeSet:
    """The original tree plus every distinct merged variant of it.

    ``provenance`` holds, for each variant, the root-to-target paths (on the
    original tree) of the subtrees that were collapsed to produce it.
    """

    original: AmrTree
    variants: tuple[AmrTree, ...]
    provenance: tuple[tuple[str, ...], ...]

    @property
    def trees(self) -> tuple[AmrTree, ...]:
        return (self.original, *self.variants)

    def __len__(self) -> int:
        return 1 + len(self.variants)


def enumerate_merge_trees(tree: AmrTree, config: MergeConfig | None = None) -> MergeTreeSet:
    """Every tree reachable from ``tree`` by valid merges, deduplicated.

    Variants are enumerated depth-first over antichains of valid targets in
    DFS order, so the output order is deterministic. Variants that collapse
    to the same canonical form (same structure, labels, and merge widths)
    are reported once. Enumerating more than ``config.max_variants`` merge
    combinations raises ``ResourceCapExceeded``.
    """
    config = config or MergeConfig()
    candidates = [nid for nid in tree.dfs_ids() if is_valid_merge(tree, nid, config)]
    subtree_of = {nid: set(tree.subtree_ids(nid)) for nid in candidates}
    variants: list[AmrTree] = []
    provenance: list[tuple[str, ...]] = []
    seen = {tree.canonical_key()}
    explored = 0

    def extend(start: int, chosen: tuple[int, ...], merged: AmrTree) -> None:
        nonlocal explored
        for index in range(start, len(candidates)):
            nid = candidates[index]
            if any(nid in subtree_of[previous] for previous in chosen):
                continue
            explored += 1
            if explored > config.max_variants:
                raise ResourceCapExceeded(
                    f"merge enumeration exceeded {config.max_variants} variants"
                )
            next_tree = apply_merge(merged, nid, config)
            key = next_tree.canonical_key()
            if key not in seen:
                seen.add(key)
                variants.append(next_tree)
                provenance.append(tuple(tree.path_of(t) for t in (*chosen, nid)))
            extend(index + 1, (*chosen, nid), next_tree)

    extend(0, (), tree)
    return MergeTreeSet(tree, tuple(variants), tuple(provenance))


def collapsability(tree_set: MergeTreeSet) -> float:
    """How far merging can shrink the tree, from 0 (not at all) to 1 (fully).

    Defined as ``1 - (smallest - 1) / (largest - 1)`` over the node counts of
    all trees in the set. A single-node tree has no meaningful value and
    raises ``UndefinedCollapsability``.
    """
    sizes = [len(t) for t in tree_set.trees]
    largest = max(sizes)
    smallest = min(sizes)
    if largest <= 1:
        raise UndefinedCollapsability("collapsability is undefined for a single-node tree")
    return 1.0 - (smallest - 1) / (largest - 1)


def total_merge_width(tree: AmrTree) -> int:
    """Sum of the widths of all merge nodes in the tree."""
    return sum(node.width for node in tree.nodes.values() if isinstance(node, Merge))
