"""AMR-to-logic conversion.

Three translations share one literal vocabulary:

* ``amr_to_formula`` — the existentially-quantified conjunction reading of a
  tree, with reentrant variables projected to the scope of the lowest common
  ancestor of their references.
* ``rot_to_implication`` — a rule of thumb as a quantifier-free implication
  whose consequent is a GOOD/BAD verdict literal.
* ``sst_to_facts`` — a situation as ground literals over fresh constants.

Conversion conventions: each instance node contributes one unary concept
literal; each non-polarity edge contributes one binary role literal (inverse
flagged edges emit swapped arguments); a ``:polarity -`` edge contributes
negation instead of a literal; a ``:named`` edge to a constant emits the
binary ``named`` predicate; merge nodes contribute one unary merge-marker
literal carrying their averaged embedding.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..amr.normalize import is_normalized
from ..amr.tree import AmrTree, Constant, Coreference, Instance, Merge
from ..errors import (
    MissingBody,
    NegationUnsupportedInFacts,
    UnnormalizedTree,
    VerdictUnmapped,
)
from ..similarity import MERGE_MARKER, Symbol
from .formula import And, Clause, Const, Exists, Formula, Implication, Literal, Not, Term, Variable

GOOD = "GOOD"
BAD = "BAD"

# Modal root concepts whose :ARG1 holds the rule body; they assert GOOD.
MODAL_ROOTS = frozenset({"recommend", "obligate", "possible", "expect"})

_ARG_ROLE = re.compile(r"^:ARG\d+$")
_NEGATION_LABEL = "-"


@dataclass(frozen=True)
class VerdictEntry:
    verdict: str  # GOOD or BAD
    negated: bool = False


class VerdictLexicon:
    """Editable map from root concepts to verdict polarity."""

    def __init__(self, entries: dict[str, VerdictEntry]):
        self.entries = dict(entries)

    def lookup(self, concept: str) -> VerdictEntry | None:
        return self.entries.get(concept)

    @classmethod
    def from_dict(cls, payload: dict) -> "VerdictLexicon":
        entries = {}
        for concept, spec in payload.items():
            verdict = spec["verdict"]
            if verdict not in (GOOD, BAD):
                raise ValueError(f"verdict for {concept!r} must be GOOD or BAD")
            entries[concept] = VerdictEntry(verdict, bool(spec.get("negated", False)))
        return cls(entries)

    @classmethod
    def load(cls, path: str | Path) -> "VerdictLexicon":
        with open(path, encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    @classmethod
    def default(cls) -> "VerdictLexicon":
        data = resources.files("amr_reasoner.data").joinpath("verdict_lexicon.json")
        return cls.from_dict(json.loads(data.read_text(encoding="utf-8")))


def _ensure_normalized(tree: AmrTree) -> None:
    if not is_normalized(tree):
        raise UnnormalizedTree(
            "tree still carries frame numbers or inverse roles; normalize first"
        )


def _has_negation(tree: AmrTree, nid: int) -> bool:
    for edge in tree.children(nid):
        target = tree.nodes[edge.target]
        if (
            edge.role == ":polarity"
            and isinstance(target, Constant)
            and target.label == _NEGATION_LABEL
        ):
            return True
    return False


def _variable_names(tree: AmrTree) -> dict[int, Variable]:
    """One variable per instance/merge node; merge nodes get fresh M names."""
    names: dict[int, Variable] = {}
    used: set[str] = set()
    for nid in tree.dfs_ids():
        node = tree.nodes[nid]
        if isinstance(node, Instance):
            name = node.label.upper()
            names[nid] = Variable(name)
            used.add(name)
    counter = 0
    for nid in tree.dfs_ids():
        if isinstance(tree.nodes[nid], Merge):
            counter += 1
            name = "M" if counter == 1 else f"M{counter}"
            while name in used:
                counter += 1
                name = f"M{counter}"
            used.add(name)
            names[nid] = Variable(name)
    return names


def _concept_literal(tree: AmrTree, nid: int, term: Term, positive: bool = True) -> Literal:
    node = tree.nodes[nid]
    if isinstance(node, Instance):
        return Literal(positive, Symbol(node.predicate, node.embedding), (term,))
    if isinstance(node, Merge):
        return Literal(positive, Symbol(MERGE_MARKER, node.embedding), (term,))
    raise TypeError(f"node {nid} has no concept literal")


def _role_literal(edge_role: str, inverted: bool, source: Term, target: Term) -> Literal:
    if inverted:
        source, target = target, source
    if edge_role == ":named":
        # The classic binary naming predicate; spelled without the role colon.
        return Literal(True, Symbol("named"), (source, target))
    return Literal(True, Symbol(edge_role), (source, target))


def _constant_term(node: Constant) -> Const:
    return Const(node.label, node.embedding, node.quoted)


def _lca(tree: AmrTree, ids: list[int]) -> int:
    paths = []
    for nid in ids:
        chain = [nid]
        while (edge := tree.parent_edge(chain[-1])) is not None:
            chain.append(edge.source)
        paths.append(list(reversed(chain)))
    shortest = min(len(path) for path in paths)
    lca = tree.root
    for depth in range(shortest):
        step = {path[depth] for path in paths}
        if len(step) != 1:
            break
        lca = step.pop()
    return lca


def amr_to_formula(tree: AmrTree) -> Formula:
    """The existentially-quantified conjunction reading of a normalized tree."""
    _ensure_normalized(tree)
    variables = _variable_names(tree)
    labels = {
        nid: node.label for nid, node in tree.nodes.items() if isinstance(node, Instance)
    }
    variable_of_label = {label: variables[nid] for nid, label in labels.items()}

    # Reentrant instances project to the lowest common ancestor of all their
    # references; at the original position only the linking role literal stays.
    lifts: dict[int, list[int]] = {}
    lifted: set[int] = set()
    for nid in tree.instance_ids():
        coref_ids = tree.coreference_ids(labels[nid])
        if not coref_ids:
            continue
        lca = _lca(tree, [nid, *coref_ids])
        if lca != nid:
            lifts.setdefault(lca, []).append(nid)
            lifted.add(nid)

    def conjoin(parts: list[Formula]) -> Formula:
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def expand(nid: int, incoming: list[Literal]) -> Formula:
        node = tree.nodes[nid]
        variable = variables[nid]
        parts: list[Formula] = list(incoming)
        parts.append(_concept_literal(tree, nid, variable))
        for edge in tree.children(nid):
            target = tree.nodes[edge.target]
            if edge.role == ":polarity":
                continue
            if isinstance(target, (Instance, Merge)):
                link = _role_literal(edge.role, edge.inverted, variable, variables[edge.target])
                if edge.target in lifted:
                    parts.append(link)
                else:
                    parts.append(expand(edge.target, [link]))
            elif isinstance(target, Coreference):
                parts.append(
                    _role_literal(
                        edge.role, edge.inverted, variable, variable_of_label[target.label]
                    )
                )
            else:
                assert isinstance(target, Constant)
                parts.append(
                    _role_literal(edge.role, edge.inverted, variable, _constant_term(target))
                )
        block: Formula = Exists(variable, conjoin(parts))
        for defined in reversed(lifts.get(nid, [])):
            lifted_block = expand(defined, [])
            assert isinstance(lifted_block, Exists)
            inner = lifted_block.body
            inner_parts = list(inner.parts) if isinstance(inner, And) else [inner]
            block = Exists(lifted_block.variable, conjoin([*inner_parts, block]))
        if _has_negation(tree, nid):
            block = Not(block)
        return block

    return expand(tree.root, [])


def _flat_literals(
    tree: AmrTree,
    start: int,
    term_of: dict[int, Term],
    variable_of_label: dict[str, Term],
) -> list[Literal]:
    """Concept and role literals of a subtree, without quantifiers.

    A node with ``:polarity -`` yields a negated concept literal; a second
    negation nested beneath one is not expressible as ground literals.
    """
    literals: list[Literal] = []

    def visit(nid: int, under_negation: bool) -> None:
        node = tree.nodes[nid]
        negated = _has_negation(tree, nid)
        if negated and under_negation:
            raise NegationUnsupportedInFacts(
                f"nested negation at node {getattr(node, 'label', nid)!r}"
            )
        term = term_of[nid]
        literals.append(_concept_literal(tree, nid, term, positive=not negated))
        for edge in tree.children(nid):
            target = tree.nodes[edge.target]
            if edge.role == ":polarity":
                continue
            if isinstance(target, (Instance, Merge)):
                literals.append(
                    _role_literal(edge.role, edge.inverted, term, term_of[edge.target])
                )
                visit(edge.target, under_negation or negated)
            elif isinstance(target, Coreference):
                literals.append(
                    _role_literal(
                        edge.role, edge.inverted, term, variable_of_label[target.label]
                    )
                )
            else:
                assert isinstance(target, Constant)
                literals.append(
                    _role_literal(edge.role, edge.inverted, term, _constant_term(target))
                )

    visit(start, False)
    deduped: list[Literal] = []
    seen: set[Literal] = set()
    for literal in literals:
        if literal not in seen:
            seen.add(literal)
            deduped.append(literal)
    return deduped


def sst_to_facts(tree: AmrTree, namespace: str | None = None) -> tuple[Literal, ...]:
    """Ground literals for a situation: variables become fresh constants.

    Constant names derive from node labels (lowercased); ``namespace``
    suffixes every derived name for cross-document uniqueness.
    """
    _ensure_normalized(tree)
    suffix = f"_{namespace}" if namespace else ""
    used: set[str] = set()
    term_of: dict[int, Term] = {}
    constant_of_label: dict[str, Term] = {}
    merge_counter = 0
    for nid in tree.dfs_ids():
        node = tree.nodes[nid]
        if isinstance(node, Instance):
            name = node.label.lower() + suffix
            while name in used:
                name += "x"
            used.add(name)
            term = Const(name, node.embedding)
            term_of[nid] = term
            constant_of_label[node.label] = term
        elif isinstance(node, Merge):
            merge_counter += 1
            base = "merge" if merge_counter == 1 else f"merge{merge_counter}"
            name = base + suffix
            while name in used:
                merge_counter += 1
                name = f"merge{merge_counter}{suffix}"
            used.add(name)
            term_of[nid] = Const(name, node.embedding)
    return tuple(_flat_literals(tree, tree.root, term_of, constant_of_label))


def rot_to_implication(tree: AmrTree, lexicon: VerdictLexicon) -> Implication:
    """A rule of thumb as antecedent literals implying a verdict literal.

    The root concept names the verdict via the lexicon (modal roots default to
    GOOD); the first :ARGn edge links to the rule body; the verdict concept
    literal and the linking role literal are dropped; a ``:polarity -`` on the
    root flips the verdict's sign.
    """
    _ensure_normalized(tree)
    root_node = tree.nodes[tree.root]
    if not isinstance(root_node, Instance):
        raise VerdictUnmapped("rule root is not an instance node")
    entry = lexicon.lookup(root_node.predicate)
    if entry is None:
        if root_node.predicate in MODAL_ROOTS:
            entry = VerdictEntry(GOOD)
        else:
            raise VerdictUnmapped(f"no verdict mapping for root concept {root_node.predicate!r}")
    negated = entry.negated ^ _has_negation(tree, tree.root)

    link = next(
        (edge for edge in tree.children(tree.root) if _ARG_ROLE.match(edge.role)), None
    )
    if link is None:
        raise MissingBody(f"rule root {root_node.label!r} has no :ARGn body edge")
    body = tree.nodes[link.target]
    if not isinstance(body, (Instance, Merge)):
        raise MissingBody("rule body must be an instance or merge node")

    variables = _variable_names(tree)
    term_of: dict[int, Term] = {nid: variables[nid] for nid in variables}
    variable_of_label: dict[str, Term] = {
        node.label: variables[nid]
        for nid, node in tree.nodes.items()
        if isinstance(node, Instance)
    }
    antecedent = tuple(_flat_literals(tree, link.target, term_of, variable_of_label))
    consequent = Literal(
        not negated, Symbol(entry.verdict), (term_of[link.target],)
    )
    return Implication(antecedent, consequent)


def to_clauses(source: Implication | tuple[Literal, ...] | list[Literal]) -> tuple[Clause, ...]:
    """Clause form: an implication becomes one clause, facts become units."""
    if isinstance(source, Implication):
        negated = [literal.negated() for literal in source.antecedent]
        return (Clause((*negated, source.consequent)),)
    return tuple(Clause((literal,)) for literal in source)
