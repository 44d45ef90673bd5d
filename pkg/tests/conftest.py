"""Shared helpers: fixture paths, embedding builders, random tree generation."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from amr_reasoner import AmrTree, parse_penman
from amr_reasoner.amr.tree import Constant, Coreference, Edge, Instance

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
GOLDEN = FIXTURES / "golden"
CORPUS = FIXTURES / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN


def unit(dim: int, axis: int) -> np.ndarray:
    vector = np.zeros(dim, dtype=np.float32)
    vector[axis] = 1.0
    return vector


def unit_at_cosine(main: np.ndarray, other: np.ndarray, cosine: float) -> np.ndarray:
    """Unit vector at the given cosine to ``main``, tilted toward ``other``."""
    return np.float32(cosine) * main + np.float32(np.sqrt(1.0 - cosine**2)) * other


def embed_labels(tree: AmrTree, assignments: dict[str, np.ndarray]) -> AmrTree:
    """Attach embeddings to instance nodes selected by label."""
    replacements = {}
    for label, vector in assignments.items():
        nid = tree.instance_by_label(label)
        node = tree.nodes[nid]
        replacements[nid] = Instance(node.label, node.predicate, vector)
    return tree.with_nodes(replacements)


def tree_from(penman: str, embedded: dict[str, np.ndarray] | None = None) -> AmrTree:
    tree = parse_penman(penman)
    return embed_labels(tree, embedded) if embedded else tree


_ROLES = (":ARG0", ":ARG1", ":ARG2", ":ARG3", ":mod", ":time", ":manner")
_CONCEPTS = ("act", "thing", "agent", "place", "way", "sign", "item", "move")


def random_tree(
    rng: np.random.Generator,
    max_nodes: int = 8,
    dim: int = 8,
    embed_prob: float = 0.6,
    constant_prob: float = 0.15,
    coref_prob: float = 0.15,
    negation_prob: float = 0.15,
) -> AmrTree:
    """A random well-formed tree mixing node kinds, negation, and reentrancy.

    Node 0 is always an instance root; every other node attaches beneath a
    random existing instance. Instance labels are unique by construction and
    coreferences only ever point at already-defined labels.
    """
    total = int(rng.integers(1, max_nodes + 1))
    nodes: dict[int, object] = {}
    edges: list[Edge] = []
    instance_ids: list[int] = []
    negated: set[int] = set()

    def fresh_embedding() -> np.ndarray | None:
        if rng.random() < embed_prob:
            vector = rng.normal(size=dim).astype(np.float32)
            norm = float(np.linalg.norm(vector))
            return vector / norm if norm else None
        return None

    for nid in range(total):
        if nid == 0:
            nodes[nid] = Instance("n0", str(rng.choice(_CONCEPTS)), fresh_embedding())
            instance_ids.append(nid)
            continue
        parent = int(rng.choice(instance_ids))
        draw = rng.random()
        if draw < constant_prob:
            quoted = bool(rng.random() < 0.5)
            nodes[nid] = Constant(f"k{nid}", quoted=quoted, embedding=fresh_embedding())
            edges.append(Edge(parent, nid, str(rng.choice(_ROLES))))
        elif draw < constant_prob + coref_prob:
            target = int(rng.choice(instance_ids))
            label = nodes[target].label
            nodes[nid] = Coreference(label)
            edges.append(Edge(parent, nid, str(rng.choice(_ROLES))))
        elif draw < constant_prob + coref_prob + negation_prob and parent not in negated:
            nodes[nid] = Constant("-")
            edges.append(Edge(parent, nid, ":polarity"))
            negated.add(parent)
        else:
            nodes[nid] = Instance(f"n{nid}", str(rng.choice(_CONCEPTS)), fresh_embedding())
            edges.append(Edge(parent, nid, str(rng.choice(_ROLES))))
            instance_ids.append(nid)
    return AmrTree(nodes, edges, 0)


# -- random logic problems ------------------------------------------------------


def random_horn_problem(rng: np.random.Generator):
    """A small Horn knowledge base plus a positive goal literal.

    Facts are ground, rules are definite clauses over one or two variables;
    roughly half the generated goals are provable.
    """
    from amr_reasoner.logic.formula import Clause, Const, Literal, Variable
    from amr_reasoner.similarity import Symbol

    constants = [Const(name) for name in "abc"]
    unary = ("p", "q", "r")
    X, Y = Variable("X"), Variable("Y")

    def constant() -> Const:
        return constants[int(rng.integers(len(constants)))]

    def unary_symbol() -> Symbol:
        return Symbol(unary[int(rng.integers(len(unary)))])

    def fact() -> Clause:
        if rng.random() < 0.3:
            return Clause((Literal(True, Symbol("rel"), (constant(), constant())),))
        return Clause((Literal(True, unary_symbol(), (constant(),)),))

    def rule() -> Clause:
        head = Literal(True, unary_symbol(), (X,))
        shape = rng.random()
        if shape < 0.4:
            body = (Literal(False, unary_symbol(), (X,)),)
        elif shape < 0.7:
            body = (
                Literal(False, unary_symbol(), (X,)),
                Literal(False, unary_symbol(), (X,)),
            )
        else:
            body = (
                Literal(False, Symbol("rel"), (X, Y)),
                Literal(False, unary_symbol(), (Y,)),
            )
        return Clause((*body, head))

    kb = [fact() for _ in range(2 + int(rng.integers(3)))]
    kb += [rule() for _ in range(1 + int(rng.integers(3)))]
    goal_arg = constant() if rng.random() < 0.7 else X
    return kb, Literal(True, unary_symbol(), (goal_arg,))


def random_scored_kb(rng: np.random.Generator, dim: int = 6):
    """A knowledge base whose predicates match only through embeddings.

    Every predicate name is unique, so each unification is scored by the
    scaled cosine of cluster-centered embeddings and proofs differ in their
    minimum step similarity.
    """
    from amr_reasoner.logic.formula import Clause, Const, Literal, Variable
    from amr_reasoner.similarity import Symbol

    centers = {name: _random_unit(rng, dim) for name in ("p", "q", "r")}
    counter = 0

    def symbol(cluster: str) -> Symbol:
        nonlocal counter
        counter += 1
        vector = centers[cluster] + 0.35 * rng.normal(size=dim)
        return Symbol(f"{cluster}_{counter}", vector / np.linalg.norm(vector))

    constants = [Const(name) for name in "ab"]
    X = Variable("X")

    def constant() -> Const:
        return constants[int(rng.integers(len(constants)))]

    def cluster() -> str:
        return ("p", "q", "r")[int(rng.integers(3))]

    kb: list[Clause] = [
        Clause((Literal(True, symbol(cluster()), (constant(),)),))
        for _ in range(3)
    ]
    for _ in range(1 + int(rng.integers(2))):
        kb.append(
            Clause((
                Literal(False, symbol(cluster()), (X,)),
                Literal(True, symbol(cluster()), (X,)),
            ))
        )
    goal_arg = constant() if rng.random() < 0.7 else X
    return kb, Literal(True, symbol(cluster()), (goal_arg,))


def _random_unit(rng: np.random.Generator, dim: int) -> np.ndarray:
    vector = rng.normal(size=dim)
    return vector / np.linalg.norm(vector)
