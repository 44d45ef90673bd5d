"""Refutation search by input resolution with similarity-scored steps.

The query is negated and resolved against the knowledge base until the empty
clause appears. Every step resolves the current center clause against one
input clause (input resolution), and the search is best-first on the minimum
step similarity so the first completed proof maximizes that minimum. Depth
and width caps bound the search; hitting a cap is reported as metadata,
distinct from an exhausted search.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from ..logic.formula import Clause, Literal, Term, Variable
from ..similarity import Symbol
from .substitution import EMPTY_SUBSTITUTION, Substitution
from .unify import SimilarityFn, UnifyResult, unify_literals


@dataclass(frozen=True)
class ProverConfig:
    similarity_threshold: float = 0.925
    max_proof_depth: int = 12
    max_resolvent_width: int = 20

    def __post_init__(self) -> None:
        if not 0.0 <= self.similarity_threshold <= 1.0:
            raise ValueError("similarity_threshold must lie in [0, 1]")
        if self.max_proof_depth < 1 or self.max_resolvent_width < 1:
            raise ValueError("search caps must be positive")


@dataclass(frozen=True)
class ProofStep:
    left: Clause
    right: Clause
    left_literal: Literal
    right_literal: Literal
    similarity: float
    substitution: Substitution
    resolvent: Clause


@dataclass(frozen=True)
class Proof:
    steps: tuple[ProofStep, ...]
    similarity: float
    final_substitution: Substitution


@dataclass(frozen=True)
class ProofSearchResult:
    proof: Proof | None
    cap_exceeded: bool = False
    expanded: int = 0

    @property
    def proved(self) -> bool:
        return self.proof is not None


def _rename_clause(clause: Clause, suffix: int) -> Clause:
    variables = {
        arg for literal in clause for arg in literal.args if isinstance(arg, Variable)
    }
    if not variables:
        return clause
    renaming: dict[Term, Term] = {
        variable: Variable(f"{variable.name}_{suffix}") for variable in variables
    }
    literals = tuple(
        Literal(
            literal.positive,
            literal.predicate,
            tuple(renaming.get(arg, arg) for arg in literal.args),
        )
        for literal in clause
    )
    return Clause(literals)


def resolve(
    center: Clause,
    side: Clause,
    threshold: float,
    sim_func: SimilarityFn,
) -> list[ProofStep]:
    """All resolvents of two clauses on complementary literal pairs."""
    steps: list[ProofStep] = []
    for center_literal in center:
        for side_literal in side:
            if center_literal.positive == side_literal.positive:
                continue
            if center_literal.arity != side_literal.arity:
                continue
            result: UnifyResult | None = unify_literals(
                center_literal, side_literal, threshold, sim_func
            )
            if result is None:
                continue
            remaining = tuple(
                literal for literal in center if literal != center_literal
            ) + tuple(literal for literal in side if literal != side_literal)
            resolvent = result.substitution.apply_clause(Clause(remaining))
            steps.append(
                ProofStep(
                    left=center,
                    right=side,
                    left_literal=center_literal,
                    right_literal=side_literal,
                    similarity=result.similarity,
                    substitution=result.substitution,
                    resolvent=resolvent,
                )
            )
    return steps


def _symbol_key(symbol: Symbol) -> tuple:
    """Symbol identity including its embedding, not just its name.

    Two predicates may share a name (notably merge markers) while carrying
    different embeddings; treating them as one would prune states that can
    still unify differently.
    """
    if symbol.embedding is None:
        return (symbol.name, None)
    return (symbol.name, hash(symbol.embedding.tobytes()))


def _canonical_center(clause: Clause) -> tuple:
    """Clause identity up to variable renaming, for visited-state pruning."""
    order: dict[Variable, int] = {}
    rendered = []
    for literal in sorted(
        clause.literals, key=lambda lit: (lit.predicate.name, not lit.positive, lit.arity)
    ):
        args = []
        for arg in literal.args:
            if isinstance(arg, Variable):
                index = order.setdefault(arg, len(order))
                args.append(("v", index))
            else:
                embedding = None if arg.embedding is None else hash(arg.embedding.tobytes())
                args.append(("c", arg.symbol, embedding))
        rendered.append((literal.positive, _symbol_key(literal.predicate), tuple(args)))
    return tuple(rendered)


def prove(
    kb: list[Clause] | tuple[Clause, ...],
    goal: Literal,
    config: ProverConfig,
    sim_func: SimilarityFn,
) -> ProofSearchResult:
    """Search for the refutation proof of ``goal`` with maximal min similarity.

    The goal literal is negated into the initial center clause; side clauses
    are always drawn from the input set (knowledge base plus the negated
    goal). Best-first expansion on the running minimum similarity guarantees
    the first empty clause found carries the maximum achievable score within
    the depth and width caps.
    """
    negated_goal = Clause((goal.negated(),))
    inputs: tuple[Clause, ...] = tuple(kb) + (negated_goal,)

    counter = itertools.count()
    rename_counter = itertools.count(1)
    # Heap entries: (-min similarity, steps taken, tiebreak, center, steps, substitution).
    heap: list[tuple] = [(-1.0, 0, next(counter), negated_goal, (), EMPTY_SUBSTITUTION)]
    best_seen: dict[tuple, float] = {}
    cap_exceeded = False
    expanded = 0

    while heap:
        neg_similarity, depth, _, center, steps, substitution = heapq.heappop(heap)
        min_similarity = -neg_similarity
        if center.is_empty:
            return ProofSearchResult(
                proof=Proof(
                    steps=tuple(steps),
                    similarity=min(step.similarity for step in steps),
                    final_substitution=substitution,
                ),
                cap_exceeded=cap_exceeded,
                expanded=expanded,
            )
        if depth >= config.max_proof_depth:
            cap_exceeded = True
            continue
        expanded += 1
        for side in inputs:
            renamed = _rename_clause(side, next(rename_counter))
            for step in resolve(center, renamed, config.similarity_threshold, sim_func):
                if len(step.resolvent) > config.max_resolvent_width:
                    cap_exceeded = True
                    continue
                new_min = min(min_similarity, step.similarity)
                key = _canonical_center(step.resolvent)
                if best_seen.get(key, -1.0) >= new_min:
                    continue
                best_seen[key] = new_min
                heapq.heappush(
                    heap,
                    (
                        -new_min,
                        depth + 1,
                        next(counter),
                        step.resolvent,
                        (*steps, step),
                        substitution.compose(step.substitution),
                    ),
                )
    return ProofSearchResult(proof=None, cap_exceeded=cap_exceeded, expanded=expanded)


def replay_proof(proof: Proof, threshold: float, sim_func: SimilarityFn) -> bool:
    """Re-derive every step and check the recorded resolvents and score.

    Each step must re-unify at its recorded similarity and rebuild its
    recorded resolvent; under the final substitution the parents' remaining
    literals must agree with the resolvent; the proof score must equal the
    minimum step similarity; the final step must yield the empty clause.
    """
    if not proof.steps:
        return False
    if proof.steps[-1].resolvent.literals:
        return False
    if abs(proof.similarity - min(s.similarity for s in proof.steps)) > 1e-12:
        return False
    final = proof.final_substitution
    for index, step in enumerate(proof.steps):
        if index > 0 and step.left != proof.steps[index - 1].resolvent:
            return False
        if step.left_literal.positive == step.right_literal.positive:
            return False
        result = unify_literals(step.left_literal, step.right_literal, threshold, sim_func)
        if result is None or abs(result.similarity - step.similarity) > 1e-12:
            return False
        remaining = tuple(l for l in step.left if l != step.left_literal) + tuple(
            l for l in step.right if l != step.right_literal
        )
        rebuilt = result.substitution.apply_clause(Clause(remaining))
        if rebuilt.key() != step.resolvent.key():
            return False
        under_final = {final.apply_literal(l) for l in remaining}
        recorded = {final.apply_literal(l) for l in step.resolvent}
        if under_final != recorded:
            return False
    return True
