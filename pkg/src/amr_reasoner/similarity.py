"""Hybrid string/embedding similarity and embedding averaging.

The hybrid function mixes exact string matching with scaled cosine similarity
and gives merged symbols special handling: a merge marker never matches by
name, only through its averaged embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, EmptyInput

# Canonical merge-marker spelling, plus an accepted legacy variant.
MERGE_MARKER = "MERGE"
_MERGE_MARKERS = frozenset({"MERGE", "MERGED"})


@dataclass(frozen=True)
class Symbol:
    """A predicate or constant name with an optional embedding.

    Equality and hashing use the name only; the embedding is match metadata.
    """

    name: str
    embedding: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("symbol name must be nonempty")


def is_merge_marker(name: str) -> bool:
    return name in _MERGE_MARKERS


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity; 0.0 when either vector has zero norm."""
    if a.shape != b.shape:
        raise DimensionMismatch(f"embedding shapes differ: {a.shape} vs {b.shape}")
    norm = float(np.linalg.norm(a)) * float(np.linalg.norm(b))
    if norm == 0.0:
        return 0.0
    return float(np.dot(a, b)) / norm


def scaled_cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine mapped from [-1, 1] to [0, 1]."""
    return (cosine(a, b) + 1.0) / 2.0


def hybrid_similarity(a: Symbol, b: Symbol) -> float:
    """Similarity in [0, 1] between two predicate or constant symbols.

    Merged symbols compare only by embedding: if either side is a merge
    marker, the result is the scaled cosine when both embeddings are present
    and 0.0 otherwise. For ordinary symbols, exact name equality scores 1.0,
    then the scaled cosine applies when both embeddings are present, and the
    score is 0.0 when neither rule fires. Symmetric in its arguments.
    """
    both_have_embeddings = a.embedding is not None and b.embedding is not None
    if is_merge_marker(a.name) or is_merge_marker(b.name):
        if both_have_embeddings:
            return scaled_cosine(a.embedding, b.embedding)
        return 0.0
    if a.name == b.name:
        return 1.0
    if both_have_embeddings:
        return scaled_cosine(a.embedding, b.embedding)
    return 0.0


def exact_similarity(a: Symbol, b: Symbol) -> float:
    """The 0/1 string-equality comparison of traditional binary unification."""
    return 1.0 if a.name == b.name else 0.0


def average_embeddings(vectors: list[np.ndarray]) -> np.ndarray:
    """Elementwise arithmetic mean of one or more equal-length vectors."""
    if not vectors:
        raise EmptyInput("cannot average zero embeddings")
    first = vectors[0]
    for vector in vectors[1:]:
        if vector.shape != first.shape:
            raise DimensionMismatch(
                f"embedding shapes differ: {vector.shape} vs {first.shape}"
            )
    return np.mean(np.stack(vectors), axis=0)
