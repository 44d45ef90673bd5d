"""Tree normalization: frame-number stripping and inverse-role flagging."""

from __future__ import annotations

import re

from .tree import AmrNode, AmrTree, Edge, Instance

_FRAME_SUFFIX = re.compile(r"(?:-\d+)+$")


def strip_frame_numbers(tree: AmrTree) -> AmrTree:
    """Drop trailing sense suffixes from instance predicates: go-02 -> go.

    Only all-digit suffixes are removed; hyphenated concepts such as
    have-rel-role are untouched. Idempotent.
    """
    replacements: dict[int, AmrNode] = {}
    for nid, node in tree.nodes.items():
        if not isinstance(node, Instance):
            continue
        stripped = _FRAME_SUFFIX.sub("", node.predicate)
        if stripped and stripped != node.predicate:
            replacements[nid] = Instance(node.label, stripped, node.embedding)
    return tree.with_nodes(replacements) if replacements else tree


def normalize_inverse_roles(tree: AmrTree) -> AmrTree:
    """Flag every ':X-of' edge as the base role ':X' with swapped arguments.

    The tree shape (parent/child direction) is preserved so depth and merge
    semantics are unchanged; downstream logic generation reads the flag and
    emits the base role with source/target swapped. Idempotent.
    """
    changed = False
    edges: list[Edge] = []
    for edge in tree.edges:
        if edge.role.endswith("-of") and not edge.inverted:
            edges.append(Edge(edge.source, edge.target, edge.role[:-3], inverted=True))
            changed = True
        else:
            edges.append(edge)
    return tree.with_edges(edges) if changed else tree


def normalize(tree: AmrTree) -> AmrTree:
    """Apply both normalization passes."""
    return normalize_inverse_roles(strip_frame_numbers(tree))


def is_normalized(tree: AmrTree) -> bool:
    for node in tree.nodes.values():
        if isinstance(node, Instance) and _FRAME_SUFFIX.search(node.predicate):
            return False
    return all(not edge.role.endswith("-of") for edge in tree.edges)
