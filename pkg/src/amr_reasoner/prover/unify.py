"""Similarity-gated unification of literal atoms.

Classical most-general-unifier computation over function-free terms, with the
equality checks on predicates and constants replaced by a similarity function.
The unification similarity starts at the predicate score and folds in each
constant-constant comparison with ``min``; binding a variable is free. The
unification succeeds only when the final score strictly exceeds the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import ArityMismatch
from ..logic.formula import Const, Literal, Variable
from ..similarity import Symbol
from .substitution import EMPTY_SUBSTITUTION, Substitution

SimilarityFn = Callable[[Symbol, Symbol], float]


@dataclass(frozen=True)
class UnifyResult:
    substitution: Substitution
    similarity: float


def unify_literals(
    a: Literal,
    b: Literal,
    threshold: float,
    sim_func: SimilarityFn,
    substitution: Substitution = EMPTY_SUBSTITUTION,
) -> UnifyResult | None:
    """Unify the atoms of two literals; polarity is the caller's concern.

    Returns the extended substitution and the unification similarity, or None
    when the score cannot stay above the threshold.
    """
    if a.arity != b.arity:
        raise ArityMismatch(
            f"{a.predicate.name}/{a.arity} cannot unify with {b.predicate.name}/{b.arity}"
        )
    similarity = sim_func(a.predicate, b.predicate)
    if similarity <= threshold:
        return None
    for left, right in zip(a.args, b.args):
        left = substitution.walk(left)
        right = substitution.walk(right)
        if left == right:
            continue
        if isinstance(left, Variable):
            substitution = substitution.bind(left, right)
        elif isinstance(right, Variable):
            substitution = substitution.bind(right, left)
        else:
            assert isinstance(left, Const) and isinstance(right, Const)
            similarity = min(similarity, sim_func(left.as_symbol(), right.as_symbol()))
            if similarity <= threshold:
                return None
    return UnifyResult(substitution, similarity)
