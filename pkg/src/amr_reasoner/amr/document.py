"""The aligned-document file format: Penman text plus token embeddings.

A document carries everything needed to build a tree with node-aligned
embeddings: the Penman string, the token sequence, a map from node paths to
token indices, and one embedding row per token (finite 32-bit floats).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import (
    AlignmentMismatch,
    AmrReasonerError,
    DimensionMismatch,
    DocumentValidationError,
)
from .normalize import normalize
from .penman import parse_penman
from .tree import AmrTree, Constant, Coreference, Instance

_FIELDS = ("id", "text", "penman", "tokens", "node_alignments", "token_embeddings")


@dataclass(frozen=True)
class AlignedAmrDocument:
    id: str
    text: str
    penman: str
    tokens: tuple[str, ...]
    node_alignments: dict[str, tuple[int, ...]]
    token_embeddings: np.ndarray = field(compare=False)

    @classmethod
    def from_dict(cls, payload: dict) -> "AlignedAmrDocument":
        missing = [name for name in _FIELDS if name not in payload]
        if missing:
            raise DocumentValidationError(f"missing fields: {', '.join(missing)}")
        rows = payload["token_embeddings"]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise DimensionMismatch(f"embedding rows have mixed lengths: {sorted(widths)}")
        matrix = np.asarray(rows, dtype=np.float32)
        if matrix.size == 0:
            matrix = matrix.reshape(len(rows), 0)
        return cls(
            id=str(payload["id"]),
            text=str(payload["text"]),
            penman=str(payload["penman"]),
            tokens=tuple(str(token) for token in payload["tokens"]),
            node_alignments={
                str(path): tuple(int(i) for i in indices)
                for path, indices in payload["node_alignments"].items()
            },
            token_embeddings=matrix,
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "text": self.text,
            "penman": self.penman,
            "tokens": list(self.tokens),
            "node_alignments": {path: list(ids) for path, ids in self.node_alignments.items()},
            "token_embeddings": [
                [float(value) for value in row] for row in self.token_embeddings
            ],
        }

    @classmethod
    def load(cls, path: str | Path) -> "AlignedAmrDocument":
        with open(path, encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_dict(), handle, indent=1)
            handle.write("\n")

    def validate(self) -> None:
        """Raise DocumentValidationError listing every contract violation."""
        problems: list[str] = []
        tree: AmrTree | None = None
        try:
            tree = parse_penman(self.penman)
        except AmrReasonerError as err:
            problems.append(f"penman does not parse: {err}")
        if tree is not None:
            for path in self.node_alignments:
                if tree.resolve_path(path) is None:
                    problems.append(f"alignment path {path!r} does not resolve")
        for path, indices in self.node_alignments.items():
            if not indices:
                problems.append(f"alignment {path!r} lists no tokens")
            for index in indices:
                if not 0 <= index < len(self.tokens):
                    problems.append(f"alignment {path!r} token index {index} out of range")
        matrix = self.token_embeddings
        if matrix.ndim != 2:
            problems.append(f"token_embeddings must be a matrix, got ndim={matrix.ndim}")
        elif matrix.shape[0] != len(self.tokens):
            problems.append(
                f"token_embeddings has {matrix.shape[0]} rows for {len(self.tokens)} tokens"
            )
        else:
            if matrix.size and not bool(np.isfinite(matrix).all()):
                problems.append("token_embeddings contains non-finite values")
            elif matrix.shape[1] and self.node_alignments:
                zero_rows = np.flatnonzero(~matrix.any(axis=1))
                aligned = {i for ids in self.node_alignments.values() for i in ids}
                bad = sorted(aligned.intersection(zero_rows.tolist()))
                if bad:
                    problems.append(f"aligned tokens {bad} have all-zero embeddings")
        if problems:
            raise DocumentValidationError(f"{self.id}: " + "; ".join(problems))


def attach_embeddings(tree: AmrTree, doc: AlignedAmrDocument) -> AmrTree:
    """Give each aligned instance/constant node the mean of its token vectors.

    Unaligned nodes keep no embedding; coreference nodes never receive one.
    Structure, labels, and edges are untouched.
    """
    matrix = doc.token_embeddings
    if matrix.ndim != 2:
        raise DimensionMismatch(f"{doc.id}: token_embeddings must be a matrix")
    replacements = {}
    for path, indices in doc.node_alignments.items():
        nid = tree.resolve_path(path)
        if nid is None:
            raise AlignmentMismatch(f"{doc.id}: path {path!r} not found in tree")
        for index in indices:
            if not 0 <= index < matrix.shape[0]:
                raise AlignmentMismatch(f"{doc.id}: token index {index} out of range")
        node = tree.nodes[nid]
        if isinstance(node, Coreference) or not indices:
            continue
        vector = matrix[list(indices)].mean(axis=0)
        if not math.isfinite(float(vector.sum())):
            raise DimensionMismatch(f"{doc.id}: non-finite embedding at {path!r}")
        if isinstance(node, Instance):
            replacements[nid] = Instance(node.label, node.predicate, vector)
        elif isinstance(node, Constant):
            replacements[nid] = Constant(node.label, node.quoted, vector)
    return tree.with_nodes(replacements) if replacements else tree


def build_document_tree(doc: AlignedAmrDocument) -> AmrTree:
    """Full pipeline: parse, attach embeddings, strip frames, flag inverses."""
    tree = parse_penman(doc.penman)
    tree = attach_embeddings(tree, doc)
    return normalize(tree)
