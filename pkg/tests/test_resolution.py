"""Resolution prover: resolvents, best-first search, caps, proof replay."""

import dataclasses

import numpy as np
import pytest

from amr_reasoner.logic.formula import Clause, Const, Literal, Variable
from amr_reasoner.logic.notation import parse_clause_file, parse_literal
from amr_reasoner.prover.resolution import (
    Proof,
    ProverConfig,
    _canonical_center,
    prove,
    replay_proof,
    resolve,
)
from amr_reasoner.prover.substitution import EMPTY_SUBSTITUTION
from amr_reasoner.similarity import Symbol, exact_similarity, hybrid_similarity
from conftest import random_horn_problem, random_scored_kb, unit, unit_at_cosine
from oracles import exhaustive_best_min, horn_least_model_proves

X = Variable("X")


def kb_from(text: str) -> tuple[Clause, ...]:
    return parse_clause_file(text)


def exact_config(**overrides) -> ProverConfig:
    settings = {"similarity_threshold": 0.0, "max_proof_depth": 12, "max_resolvent_width": 20}
    settings.update(overrides)
    return ProverConfig(**settings)


class TestProverConfig:
    def test_defaults_are_valid(self):
        config = ProverConfig()
        assert config.similarity_threshold == 0.925
        assert config.max_proof_depth == 12
        assert config.max_resolvent_width == 20

    @pytest.mark.parametrize("threshold", [-0.1, 1.1])
    def test_threshold_must_lie_in_unit_interval(self, threshold):
        with pytest.raises(ValueError, match="similarity_threshold"):
            ProverConfig(similarity_threshold=threshold)

    def test_caps_must_be_positive(self):
        with pytest.raises(ValueError, match="caps"):
            ProverConfig(max_proof_depth=0)
        with pytest.raises(ValueError, match="caps"):
            ProverConfig(max_resolvent_width=0)


class TestResolve:
    def test_ground_resolution_drops_both_literals(self):
        center = kb_from("!p(a) & q(a)")[0:1]
        # parse gives unit clauses; build the two-literal clause by hand
        center = Clause((parse_literal("!p(a)"), parse_literal("q(a)")))
        side = Clause((parse_literal("p(a)"),))
        (step,) = resolve(center, side, 0.0, exact_similarity)
        assert step.resolvent == Clause((parse_literal("q(a)"),))
        assert step.similarity == 1.0
        assert step.left_literal == parse_literal("!p(a)")
        assert step.right_literal == parse_literal("p(a)")

    def test_same_polarity_pairs_are_skipped(self):
        left = Clause((parse_literal("p(a)"),))
        right = Clause((parse_literal("p(a)"),))
        assert resolve(left, right, 0.0, exact_similarity) == []

    def test_arity_mismatch_is_skipped_not_raised(self):
        left = Clause((parse_literal("!p(a)"),))
        right = Clause((parse_literal("p(a,b)"),))
        assert resolve(left, right, 0.0, exact_similarity) == []

    def test_substitution_is_applied_to_the_resolvent(self):
        center = Clause((parse_literal("!p(X)"), parse_literal("q(X)")))
        side = Clause((parse_literal("p(a)"),))
        (step,) = resolve(center, side, 0.0, exact_similarity)
        assert step.resolvent == Clause((parse_literal("q(a)"),))
        assert step.substitution.walk(X) == Const("a")

    def test_every_complementary_pair_yields_a_step(self):
        center = Clause((parse_literal("!p(X)"),))
        side = Clause((parse_literal("p(a)"), parse_literal("p(b)")))
        steps = resolve(center, side, 0.0, exact_similarity)
        assert {str(step.substitution.walk(X)) for step in steps} == {"a", "b"}


class TestProve:
    def test_two_step_chain(self):
        kb = kb_from("p(a)\np(X) -> q(X)")
        result = prove(kb, parse_literal("q(a)"), exact_config(), exact_similarity)
        assert result.proved
        assert not result.cap_exceeded
        assert len(result.proof.steps) == 2
        assert result.proof.similarity == 1.0
        assert result.proof.steps[-1].resolvent.is_empty
        assert replay_proof(result.proof, 0.0, exact_similarity)

    def test_goal_variable_gets_bound(self):
        kb = kb_from("p(a)\np(X) -> q(X)")
        result = prove(kb, parse_literal("q(Z)"), exact_config(), exact_similarity)
        assert result.proved
        assert result.proof.final_substitution.walk(Variable("Z")) == Const("a")

    def test_unit_fact_proof_expands_once(self):
        result = prove(
            kb_from("q(a)"), parse_literal("q(a)"), exact_config(), exact_similarity
        )
        assert result.proved
        assert len(result.proof.steps) == 1
        assert result.expanded == 1

    def test_unprovable_goal_exhausts_without_caps(self):
        kb = kb_from("p(a)\np(X) -> q(X)")
        result = prove(kb, parse_literal("r(a)"), exact_config(), exact_similarity)
        assert not result.proved
        assert result.proof is None
        assert not result.cap_exceeded
        assert result.expanded >= 1

    def test_prefers_higher_min_similarity_over_shorter_proof(self):
        goal_vec = unit(6, 0)
        near = unit_at_cosine(goal_vec, unit(6, 1), 0.8)  # scaled 0.9
        far = unit_at_cosine(goal_vec, unit(6, 2), 0.2)  # scaled 0.6
        goal = Literal(True, Symbol("goal", goal_vec), (Const("c"),))
        direct = Clause((Literal(True, Symbol("goal_ish", far), (Const("c"),)),))
        rule = Clause((
            Literal(False, Symbol("step", unit(6, 3)), (X,)),
            Literal(True, Symbol("goal_like", near), (X,)),
        ))
        fact = Clause((Literal(True, Symbol("step_like", unit_at_cosine(unit(6, 3), unit(6, 4), 0.9)), (Const("c"),)),))

        result = prove([direct, rule, fact], goal, exact_config(), hybrid_similarity)
        assert result.proved
        # The one-step proof through the far fact scores 0.6; the two-step
        # chain scores min(0.9, 0.95) and must win despite being longer.
        assert len(result.proof.steps) == 2
        assert result.proof.similarity == pytest.approx(0.9, abs=1e-6)
        assert replay_proof(result.proof, 0.0, hybrid_similarity)

        capped = prove(
            [direct, rule, fact], goal, exact_config(max_proof_depth=1), hybrid_similarity
        )
        assert capped.proved
        assert len(capped.proof.steps) == 1
        assert capped.proof.similarity == pytest.approx(0.6, abs=1e-6)
        assert capped.cap_exceeded

    def test_depth_cap_blocks_long_chains(self):
        kb = kb_from("p0(a)\np0(X) -> p1(X)\np1(X) -> p2(X)\np2(X) -> p3(X)")
        deep = prove(kb, parse_literal("p3(a)"), exact_config(), exact_similarity)
        assert deep.proved and len(deep.proof.steps) == 4
        shallow = prove(
            kb, parse_literal("p3(a)"), exact_config(max_proof_depth=3), exact_similarity
        )
        assert not shallow.proved
        assert shallow.cap_exceeded

    def test_proof_of_exactly_max_depth_is_found(self):
        kb = kb_from("p0(a)\np0(X) -> p1(X)\np1(X) -> p2(X)\np2(X) -> p3(X)")
        result = prove(
            kb, parse_literal("p3(a)"), exact_config(max_proof_depth=4), exact_similarity
        )
        assert result.proved
        assert len(result.proof.steps) == 4

    def test_width_cap_blocks_wide_resolvents(self):
        kb = kb_from("b1(a)\nb2(a)\nb3(a)\nb1(X) & b2(X) & b3(X) -> g(X)")
        wide = prove(kb, parse_literal("g(a)"), exact_config(), exact_similarity)
        assert wide.proved and len(wide.proof.steps) == 4
        assert replay_proof(wide.proof, 0.0, exact_similarity)
        narrow = prove(
            kb, parse_literal("g(a)"), exact_config(max_resolvent_width=2), exact_similarity
        )
        assert not narrow.proved
        assert narrow.cap_exceeded

    def test_threshold_gates_the_whole_search(self):
        goal_vec = unit(4, 0)
        close = unit_at_cosine(goal_vec, unit(4, 1), 0.5)  # scaled 0.75
        kb = [Clause((Literal(True, Symbol("near", close), (Const("c"),)),))]
        goal = Literal(True, Symbol("target", goal_vec), (Const("c"),))
        assert prove(kb, goal, exact_config(similarity_threshold=0.7), hybrid_similarity).proved
        blocked = prove(kb, goal, exact_config(similarity_threshold=0.75), hybrid_similarity)
        assert not blocked.proved
        assert not blocked.cap_exceeded


class TestCanonicalCenter:
    def test_invariant_under_renaming_and_order(self):
        a = Clause((parse_literal("!p(X)"), parse_literal("q(X,Y)")))
        b = Clause((parse_literal("q(A,B)"), parse_literal("!p(A)")))
        assert _canonical_center(a) == _canonical_center(b)

    def test_distinguishes_binding_patterns(self):
        a = Clause((parse_literal("q(X,X)"),))
        b = Clause((parse_literal("q(X,Y)"),))
        assert _canonical_center(a) != _canonical_center(b)

    def test_distinguishes_same_name_predicates_by_embedding(self):
        one = Clause((Literal(True, Symbol("MERGE", unit(4, 0)), (X,)),))
        two = Clause((Literal(True, Symbol("MERGE", unit(4, 1)), (X,)),))
        assert _canonical_center(one) != _canonical_center(two)
        same = Clause((Literal(True, Symbol("MERGE", unit(4, 0)), (X,)),))
        assert _canonical_center(one) == _canonical_center(same)

    def test_distinguishes_constants_by_embedding(self):
        one = Clause((Literal(True, Symbol("p"), (Const("c", unit(4, 0)),)),))
        two = Clause((Literal(True, Symbol("p"), (Const("c", unit(4, 1)),)),))
        assert _canonical_center(one) != _canonical_center(two)


class TestReplayProof:
    def proof_of(self, text: str, goal: str) -> Proof:
        result = prove(kb_from(text), parse_literal(goal), exact_config(), exact_similarity)
        assert result.proved
        return result.proof

    def test_accepts_genuine_proofs(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        assert replay_proof(proof, 0.0, exact_similarity)

    def test_rejects_empty_step_list(self):
        proof = self.proof_of("q(a)", "q(a)")
        assert not replay_proof(dataclasses.replace(proof, steps=()), 0.0, exact_similarity)

    def test_rejects_truncated_proofs(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        truncated = dataclasses.replace(proof, steps=proof.steps[:-1])
        assert not replay_proof(truncated, 0.0, exact_similarity)

    def test_rejects_reordered_steps(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        shuffled = dataclasses.replace(proof, steps=proof.steps[::-1])
        assert not replay_proof(shuffled, 0.0, exact_similarity)

    def test_rejects_tampered_score(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        inflated = dataclasses.replace(proof, similarity=proof.similarity - 0.25)
        assert not replay_proof(inflated, 0.0, exact_similarity)

    def test_rejects_tampered_step_similarity(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        first = dataclasses.replace(proof.steps[0], similarity=0.5)
        tampered = dataclasses.replace(proof, steps=(first, *proof.steps[1:]))
        assert not replay_proof(tampered, 0.0, exact_similarity)

    def test_rejects_tampered_resolvent(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        forged_clause = Clause((parse_literal("r(a)"),))
        first = dataclasses.replace(proof.steps[0], resolvent=forged_clause)
        tampered = dataclasses.replace(proof, steps=(first, *proof.steps[1:]))
        assert not replay_proof(tampered, 0.0, exact_similarity)

    def test_rejects_same_polarity_step(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        first = proof.steps[0]
        forged = dataclasses.replace(first, right_literal=first.left_literal)
        tampered = dataclasses.replace(proof, steps=(forged, *proof.steps[1:]))
        assert not replay_proof(tampered, 0.0, exact_similarity)

    def test_rejects_tampered_final_substitution(self):
        proof = self.proof_of("p(a)\np(X) -> q(X)", "q(a)")
        wiped = dataclasses.replace(proof, final_substitution=EMPTY_SUBSTITUTION)
        assert not replay_proof(wiped, 0.0, exact_similarity)


class TestAgainstOracles:
    def test_matches_saturation_prover_on_horn_problems(self):
        rng = np.random.default_rng(20240822)
        outcomes = {True: 0, False: 0}
        for _ in range(25):
            kb, goal = random_horn_problem(rng)
            expected = horn_least_model_proves(kb, goal)
            result = prove(kb, goal, exact_config(max_proof_depth=20), exact_similarity)
            assert result.proved == expected, f"disagrees on {list(map(str, kb))} |- {goal}"
            if result.proved:
                assert result.proof.similarity == 1.0
                assert replay_proof(result.proof, 0.0, exact_similarity)
            outcomes[expected] += 1
        assert outcomes[True] >= 5 and outcomes[False] >= 5

    def test_finds_the_best_min_similarity_proof(self):
        rng = np.random.default_rng(20240823)
        threshold, depth = 0.55, 4
        config = ProverConfig(
            similarity_threshold=threshold, max_proof_depth=depth, max_resolvent_width=20
        )
        proved = 0
        for _ in range(30):
            kb, goal = random_scored_kb(rng)
            best = exhaustive_best_min(kb, goal, threshold, hybrid_similarity, depth)
            result = prove(kb, goal, config, hybrid_similarity)
            assert result.proved == (best is not None)
            if result.proved:
                proved += 1
                assert result.proof.similarity == pytest.approx(best, abs=1e-9)
                assert result.proof.similarity > threshold
                assert replay_proof(result.proof, threshold, hybrid_similarity)
        assert proved >= 8
