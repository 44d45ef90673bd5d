"""Matching a rule of thumb against a situation across merged variants.

Each rule variant becomes an implication clause, each situation variant a
set of ground facts, and the pair is handed to the prover with the rule's
own verdict as the goal. Variant pairs are tried from least to most merged
(the untouched pair first), and the best proof by similarity wins; a perfect
score ends the search early.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import MissingBody, VerdictUnmapped
from ..logic.convert import BAD, GOOD, VerdictLexicon, rot_to_implication, sst_to_facts, to_clauses
from ..logic.formula import Implication, Literal, Variable
from ..merge import MergeConfig, MergeTreeSet, enumerate_merge_trees, total_merge_width
from ..prover.resolution import Proof, ProverConfig, prove
from ..similarity import Symbol, hybrid_similarity

_QUERY = Variable("Q")


@dataclass(frozen=True)
class MatchConfig:
    prover: ProverConfig = field(default_factory=ProverConfig)
    merge: MergeConfig = field(default_factory=MergeConfig)
    all_verdicts: bool = False


@dataclass(frozen=True)
class MatchResult:
    matched: bool
    similarity: float | None
    goal: Literal | None
    proof: Proof | None
    rot_index: int | None
    sst_index: int | None
    pairs_tried: int
    skipped: int
    cap_exceeded: bool


def _goals(implication: Implication, all_verdicts: bool) -> tuple[Literal, ...]:
    if not all_verdicts:
        consequent = implication.consequent
        return (Literal(consequent.positive, consequent.predicate, (_QUERY,)),)
    return (
        Literal(True, Symbol(GOOD), (_QUERY,)),
        Literal(True, Symbol(BAD), (_QUERY,)),
        Literal(False, Symbol(GOOD), (_QUERY,)),
        Literal(False, Symbol(BAD), (_QUERY,)),
    )


def match_tree_sets(
    rot_set: MergeTreeSet,
    sst_set: MergeTreeSet,
    lexicon: VerdictLexicon,
    config: MatchConfig | None = None,
) -> MatchResult:
    """Best-scoring proof of the rule's verdict over all variant pairs.

    Variant pairs are ordered by total merge width (ascending), so the
    original pair comes first and similarity 1.0 short-circuits the rest.
    Variants whose rule form cannot be built (for example when merging has
    swallowed the verdict structure) are skipped, not fatal.
    """
    config = config or MatchConfig()
    rot_trees = rot_set.trees
    sst_trees = sst_set.trees
    order = sorted(
        ((i, j) for i in range(len(rot_trees)) for j in range(len(sst_trees))),
        key=lambda pair: (
            total_merge_width(rot_trees[pair[0]]) + total_merge_width(sst_trees[pair[1]]),
            pair,
        ),
    )
    best: tuple[float, Literal, Proof, int, int] | None = None
    pairs_tried = 0
    skipped = 0
    cap_exceeded = False
    for i, j in order:
        try:
            implication = rot_to_implication(rot_trees[i], lexicon)
        except (VerdictUnmapped, MissingBody):
            skipped += 1
            continue
        kb = to_clauses(implication) + to_clauses(sst_to_facts(sst_trees[j]))
        pairs_tried += 1
        for goal in _goals(implication, config.all_verdicts):
            result = prove(list(kb), goal, config.prover, hybrid_similarity)
            cap_exceeded = cap_exceeded or result.cap_exceeded
            if not result.proved:
                continue
            proof = result.proof
            if best is None or proof.similarity > best[0]:
                best = (proof.similarity, goal, proof, i, j)
            if proof.similarity >= 1.0:
                return _result(best, pairs_tried, skipped, cap_exceeded)
    return _result(best, pairs_tried, skipped, cap_exceeded)


def _result(
    best: tuple[float, Literal, Proof, int, int] | None,
    pairs_tried: int,
    skipped: int,
    cap_exceeded: bool,
) -> MatchResult:
    if best is None:
        return MatchResult(
            matched=False,
            similarity=None,
            goal=None,
            proof=None,
            rot_index=None,
            sst_index=None,
            pairs_tried=pairs_tried,
            skipped=skipped,
            cap_exceeded=cap_exceeded,
        )
    similarity, goal, proof, i, j = best
    return MatchResult(
        matched=True,
        similarity=similarity,
        goal=goal,
        proof=proof,
        rot_index=i,
        sst_index=j,
        pairs_tried=pairs_tried,
        skipped=skipped,
        cap_exceeded=cap_exceeded,
    )


def match_trees(rot_tree, sst_tree, lexicon: VerdictLexicon, config: MatchConfig | None = None) -> MatchResult:
    """Convenience wrapper: enumerate both variant sets, then match them."""
    config = config or MatchConfig()
    return match_tree_sets(
        enumerate_merge_trees(rot_tree, config.merge),
        enumerate_merge_trees(sst_tree, config.merge),
        lexicon,
        config,
    )
