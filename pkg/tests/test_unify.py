"""Similarity-gated unification."""

import numpy as np
import pytest

from amr_reasoner.errors import ArityMismatch
from amr_reasoner.logic.formula import Const, Literal, Variable
from amr_reasoner.prover.substitution import Substitution
from amr_reasoner.prover.unify import unify_literals
from amr_reasoner.similarity import Symbol, exact_similarity, hybrid_similarity
from conftest import unit, unit_at_cosine
from oracles import _own_apply, _own_unify

X, Y, Z = Variable("X"), Variable("Y"), Variable("Z")


def lit(name: str, *args, positive: bool = True) -> Literal:
    return Literal(positive, Symbol(name), tuple(args))


def exact_unify(a: Literal, b: Literal, threshold: float = 0.0):
    return unify_literals(a, b, threshold, exact_similarity)


def test_identical_ground_literals():
    result = exact_unify(lit("p", Const("a")), lit("p", Const("a")))
    assert result is not None
    assert result.similarity == 1.0
    assert len(result.substitution) == 0


def test_polarity_is_ignored():
    result = exact_unify(lit("p", Const("a")), lit("p", Const("a"), positive=False))
    assert result is not None


def test_arity_mismatch_raises():
    with pytest.raises(ArityMismatch, match="p/1.*p/2"):
        exact_unify(lit("p", X), lit("p", X, Y))


def test_variable_bindings():
    result = exact_unify(lit("p", X, Const("b")), lit("p", Const("a"), Y))
    assert result is not None
    assert result.substitution.walk(X) == Const("a")
    assert result.substitution.walk(Y) == Const("b")

    linked = exact_unify(lit("p", X), lit("p", Y))
    assert linked is not None
    assert linked.substitution.walk(X) == linked.substitution.walk(Y)


def test_repeated_variable_forces_equal_arguments():
    assert exact_unify(lit("p", X, X), lit("p", Const("a"), Const("b"))) is None
    same = exact_unify(lit("p", X, X), lit("p", Const("a"), Const("a")))
    assert same is not None
    assert same.substitution.walk(X) == Const("a")


def test_mismatched_predicates_fail_without_embeddings():
    assert exact_unify(lit("p", X), lit("q", X)) is None
    assert unify_literals(lit("p", X), lit("q", X), 0.0, hybrid_similarity) is None


def test_threshold_gate_is_strict():
    # A score exactly at the threshold does not pass.
    assert unify_literals(lit("p", X), lit("p", X), 1.0, exact_similarity) is None
    assert unify_literals(lit("p", X), lit("p", X), 0.999, exact_similarity) is not None


def test_embedded_predicates_score_scaled_cosine():
    dog = unit(4, 0)
    hound = unit_at_cosine(dog, unit(4, 1), 0.8)
    a = Literal(True, Symbol("dog", dog), (X,))
    b = Literal(True, Symbol("hound", hound), (Const("c"),))
    result = unify_literals(a, b, 0.85, hybrid_similarity)
    assert result is not None
    assert result.similarity == pytest.approx(0.9)
    # The gate is strict: a threshold equal to the achieved score rejects.
    assert unify_literals(a, b, result.similarity, hybrid_similarity) is None


def test_constant_comparison_folds_min():
    dog = unit(4, 0)
    hound = unit_at_cosine(dog, unit(4, 1), 0.6)
    a = lit("walk", Const("dog", dog))
    b = lit("walk", Const("hound", hound))
    result = unify_literals(a, b, 0.5, hybrid_similarity)
    assert result is not None
    # Predicate similarity 1.0 folds with the constant score 0.8.
    assert result.similarity == pytest.approx(0.8)
    assert unify_literals(a, b, result.similarity, hybrid_similarity) is None


def test_constant_fold_keeps_the_minimum_across_positions():
    main = unit(6, 0)
    near = unit_at_cosine(main, unit(6, 1), 0.9)
    far = unit_at_cosine(main, unit(6, 2), 0.2)
    a = lit("p", Const("m1", main), Const("m2", main))
    b = lit("p", Const("n1", near), Const("n2", far))
    result = unify_literals(a, b, 0.0, hybrid_similarity)
    assert result is not None
    assert result.similarity == pytest.approx(0.6)


def test_unembedded_distinct_constants_fail():
    assert exact_unify(lit("p", Const("a")), lit("p", Const("b"))) is None
    assert unify_literals(
        lit("p", Const("a")), lit("p", Const("b")), 0.0, hybrid_similarity
    ) is None


def test_existing_substitution_is_extended_not_replaced():
    seeded = Substitution({X: Const("a")})
    result = unify_literals(
        lit("p", X), lit("p", Const("a")), 0.0, exact_similarity, seeded
    )
    assert result is not None
    assert result.substitution.walk(X) == Const("a")
    conflicting = unify_literals(
        lit("p", X), lit("p", Const("b")), 0.0, exact_similarity, seeded
    )
    assert conflicting is None


def test_quoted_and_plain_spellings_of_same_symbol_unify():
    result = exact_unify(
        lit("named", X, Const("bo", quoted=True)), lit("named", Y, Const("bo"))
    )
    assert result is not None


def alpha_canonical(literal: Literal) -> tuple:
    """Literal shape with variables numbered in order of first appearance."""
    order: dict[Variable, int] = {}
    args = []
    for arg in literal.args:
        if isinstance(arg, Variable):
            args.append(("v", order.setdefault(arg, len(order))))
        else:
            args.append(("c", arg.symbol))
    return (literal.predicate.name, tuple(args))


def test_agreement_with_reference_unifier_on_random_pairs():
    from amr_reasoner.logic.formula import Clause

    rng = np.random.default_rng(20240821)
    variables = [X, Y, Z]
    constants = [Const(name) for name in "ab"]
    predicates = ["p", "q"]

    def random_literal() -> Literal:
        arity = int(rng.integers(0, 4))
        args = tuple(
            (variables + constants)[int(rng.integers(5))] for _ in range(arity)
        )
        return Literal(True, Symbol(predicates[int(rng.integers(2))]), args)

    compared = unified = 0
    for _ in range(500):
        a, b = random_literal(), random_literal()
        if a.arity != b.arity:
            continue
        compared += 1
        package = unify_literals(a, b, 0.0, exact_similarity)
        reference = _own_unify(a, b)
        assert (package is None) == (reference is None)
        if package is not None:
            unified += 1
            applied_pkg = package.substitution.apply_literal(a)
            (applied_ref,) = _own_apply(Clause((a,)), reference).literals
            # A most general unifier makes both atoms the same literal, and
            # that literal is unique up to variable renaming.
            assert applied_pkg == package.substitution.apply_literal(b)
            assert applied_ref == next(iter(_own_apply(Clause((b,)), reference)))
            assert alpha_canonical(applied_pkg) == alpha_canonical(applied_ref)
    assert compared >= 100 and unified >= 25
