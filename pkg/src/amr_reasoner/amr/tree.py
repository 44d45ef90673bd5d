"""Typed AMR tree model.

A tree is a set of integer-keyed nodes plus an ordered edge list. Four node
kinds exist: instances (``b / boy``), constants (``-``, ``"Mr Krupp"``, ``5``),
coreferences (a repeated variable), and merge nodes (a collapsed subtree
carrying an averaged embedding). Trees are immutable after construction; every
transformation returns a new tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..errors import DanglingCoreference, DuplicateInstanceLabel, MalformedPenman

MERGE_LABEL = "MERGE"


@dataclass(frozen=True, eq=False)
class Instance:
    label: str
    predicate: str
    embedding: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class Constant:
    label: str
    quoted: bool = False
    embedding: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class Coreference:
    label: str


@dataclass(frozen=True, eq=False)
class Merge:
    embedding: np.ndarray
    width: int
    label: str = MERGE_LABEL


AmrNode = Instance | Constant | Coreference | Merge


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    role: str
    # Set by normalize_inverse_roles: the role was ':X-of' in the source text,
    # so logic generation must emit ':X' with swapped arguments.
    inverted: bool = False


def _source_role(edge: Edge) -> str:
    """The role as it was spelled in the source text."""
    return edge.role + "-of" if edge.inverted else edge.role


class AmrTree:
    """Rooted tree over integer node ids with role-labeled edges."""

    def __init__(self, nodes: dict[int, AmrNode], edges: list[Edge], root: int):
        self.nodes: dict[int, AmrNode] = dict(nodes)
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.root = root
        self._children: dict[int, list[Edge]] = {nid: [] for nid in self.nodes}
        self._parent: dict[int, Edge] = {}
        self._validate()

    def _validate(self) -> None:
        for edge in self.edges:
            if edge.source not in self.nodes or edge.target not in self.nodes:
                raise MalformedPenman(f"edge {edge} references unknown node id")
            if not isinstance(self.nodes[edge.source], Instance):
                raise MalformedPenman(f"edge {edge} does not originate at an instance node")
            if edge.target in self._parent:
                raise MalformedPenman(f"node {edge.target} has two incoming edges")
            self._children[edge.source].append(edge)
            self._parent[edge.target] = edge
        if self.root not in self.nodes or self.root in self._parent:
            raise MalformedPenman("root must be a node with no incoming edge")
        orphans = [nid for nid in self.nodes if nid != self.root and nid not in self._parent]
        if orphans:
            raise MalformedPenman(f"nodes {orphans} are unreachable from the root")

        defined: dict[str, int] = {}
        for nid, node in self.nodes.items():
            if isinstance(node, Instance):
                if node.label in defined:
                    raise DuplicateInstanceLabel(node.label)
                defined[node.label] = nid
        for node in self.nodes.values():
            if isinstance(node, Coreference) and node.label not in defined:
                raise DanglingCoreference(node.label)

    # -- structure queries ---------------------------------------------------

    def children(self, nid: int) -> tuple[Edge, ...]:
        return tuple(self._children.get(nid, ()))

    def parent_edge(self, nid: int) -> Edge | None:
        return self._parent.get(nid)

    def depth(self, nid: int) -> int:
        depth = 0
        while (edge := self._parent.get(nid)) is not None:
            nid = edge.source
            depth += 1
        return depth

    def max_depth(self) -> int:
        return max(self.depth(nid) for nid in self.nodes)

    def subtree_ids(self, nid: int) -> list[int]:
        """Ids of ``nid`` and all its descendants, in depth-first order."""
        out = [nid]
        for edge in self.children(nid):
            out.extend(self.subtree_ids(edge.target))
        return out

    def dfs_ids(self) -> list[int]:
        return self.subtree_ids(self.root)

    def instance_ids(self) -> list[int]:
        return [nid for nid in self.dfs_ids() if isinstance(self.nodes[nid], Instance)]

    def instance_by_label(self, label: str) -> int:
        for nid, node in self.nodes.items():
            if isinstance(node, Instance) and node.label == label:
                return nid
        raise KeyError(label)

    def coreference_ids(self, label: str) -> list[int]:
        return [
            nid
            for nid, node in self.nodes.items()
            if isinstance(node, Coreference) and node.label == label
        ]

    def __len__(self) -> int:
        return len(self.nodes)

    # -- node paths ------------------------------------------------------------

    def path_of(self, nid: int) -> str:
        """Root-to-node path of ``role.ordinal`` steps, '' for the root.

        Roles render in their source spelling (an inverted edge renders as
        ``:X-of``), so paths written before inverse-role normalization still
        resolve afterwards. The ordinal counts same-role siblings in edge
        order, keeping paths unambiguous when a parent repeats a role.
        """
        parts: list[str] = []
        while (edge := self._parent.get(nid)) is not None:
            role = _source_role(edge)
            same_role = [e for e in self.children(edge.source) if _source_role(e) == role]
            ordinal = same_role.index(edge)
            parts.append(f"{role}.{ordinal}")
            nid = edge.source
        return "/".join(reversed(parts))

    def resolve_path(self, path: str) -> int | None:
        """Node id for a path string, or None when the path does not resolve."""
        nid = self.root
        if path == "":
            return nid
        for part in path.split("/"):
            role, _, ordinal_text = part.rpartition(".")
            if not role or not ordinal_text.isdigit():
                return None
            ordinal = int(ordinal_text)
            matches = [e for e in self.children(nid) if _source_role(e) == role]
            if ordinal >= len(matches):
                return None
            nid = matches[ordinal].target
        return nid

    # -- transformation helpers -------------------------------------------------

    def with_nodes(self, replacements: dict[int, AmrNode]) -> "AmrTree":
        nodes = dict(self.nodes)
        nodes.update(replacements)
        return AmrTree(nodes, list(self.edges), self.root)

    def with_edges(self, edges: list[Edge]) -> "AmrTree":
        return AmrTree(dict(self.nodes), edges, self.root)

    # -- canonical form -----------------------------------------------------------

    def canonical_key(self) -> str:
        """Deterministic serialization of structure + labels + merge widths.

        Used to deduplicate merge variants; embeddings deliberately excluded.
        """

        def render(nid: int) -> str:
            node = self.nodes[nid]
            if isinstance(node, Instance):
                head = f"i:{node.label}/{node.predicate}"
            elif isinstance(node, Constant):
                head = f'c:"{node.label}"' if node.quoted else f"c:{node.label}"
            elif isinstance(node, Coreference):
                head = f"r:{node.label}"
            else:
                head = f"m:{node.width}"
            kids = "".join(
                f"({_source_role(edge)} {render(edge.target)})" for edge in self.children(nid)
            )
            return head + kids

        return render(self.root)

    def negation_edge_count(self) -> int:
        """Number of ``:polarity`` edges pointing at a ``-`` constant."""
        count = 0
        for edge in self.edges:
            target = self.nodes[edge.target]
            if edge.role == ":polarity" and isinstance(target, Constant) and target.label == "-":
                count += 1
        return count

    def __repr__(self) -> str:
        return f"AmrTree(root={self.root!r}, nodes={len(self.nodes)}, edges={len(self.edges)})"


def iter_instance_coref_groups(tree: AmrTree) -> Iterator[tuple[int, list[int]]]:
    """Yield (instance id, coreference ids) for instances that have coreferences."""
    for nid in tree.instance_ids():
        node = tree.nodes[nid]
        assert isinstance(node, Instance)
        corefs = tree.coreference_ids(node.label)
        if corefs:
            yield nid, corefs
