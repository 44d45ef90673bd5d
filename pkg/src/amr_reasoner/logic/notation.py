"""Plain-text notation for formulae, literals, and clause files.

Rendering rules: ``!`` for negation, `` & `` for conjunction, `` -> `` for
implication, ``exists V.(...)`` for quantifiers, uppercase names for
variables, lowercase for constants, double quotes for string constants. The
renderer is deterministic, and ``parse_formula_line`` reads back the
quantifier-free subset used in clause files.
"""

from __future__ import annotations

import re

from ..errors import MalformedFormulaText
from ..similarity import Symbol
from .formula import (
    And,
    Clause,
    Const,
    Exists,
    Formula,
    Implication,
    Literal,
    Not,
    Term,
    Variable,
)

_TERM_PATTERN = re.compile(r'"[^"]*"|[^,()\s]+')
_LITERAL_PATTERN = re.compile(r"^\s*(!?)\s*([^\s(),]+)\(([^()]*)\)\s*$")


def format_term(term: Term) -> str:
    return str(term)


def format_literal(literal: Literal) -> str:
    return str(literal)


def format_formula(formula: Formula) -> str:
    if isinstance(formula, Literal):
        return format_literal(formula)
    if isinstance(formula, And):
        return " & ".join(format_formula(part) for part in formula.parts)
    if isinstance(formula, Exists):
        return f"exists {formula.variable.name}.({format_formula(formula.body)})"
    if isinstance(formula, Not):
        body = format_formula(formula.body)
        if isinstance(formula.body, (Literal, Exists)):
            return f"!{body}"
        return f"!({body})"
    if isinstance(formula, Implication):
        antecedent = " & ".join(format_literal(lit) for lit in formula.antecedent)
        return f"{antecedent} -> {format_literal(formula.consequent)}"
    raise TypeError(f"unknown formula node: {formula!r}")


def format_facts(literals: tuple[Literal, ...] | list[Literal]) -> str:
    return "\n".join(format_literal(literal) for literal in literals)


def format_clause(clause: Clause) -> str:
    return str(clause)


def _parse_term(text: str) -> Term:
    text = text.strip()
    if not text:
        raise MalformedFormulaText("empty term")
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return Const(text[1:-1], quoted=True)
    if text[0].isupper():
        return Variable(text)
    return Const(text)


def parse_literal(text: str) -> Literal:
    match = _LITERAL_PATTERN.match(text)
    if not match:
        raise MalformedFormulaText(f"cannot parse literal: {text!r}")
    sign, predicate, arg_text = match.groups()
    args: tuple[Term, ...] = ()
    if arg_text.strip():
        args = tuple(_parse_term(piece) for piece in _TERM_PATTERN.findall(arg_text))
    return Literal(sign != "!", Symbol(predicate), args)


def parse_formula_line(text: str) -> Implication | list[Literal]:
    """One clause-file line: an implication, or a conjunction of literals."""
    text = text.strip()
    if "->" in text:
        left, _, right = text.partition("->")
        antecedent = tuple(parse_literal(piece) for piece in _split_conjuncts(left))
        consequent = parse_literal(right)
        if not antecedent:
            raise MalformedFormulaText(f"implication without antecedent: {text!r}")
        return Implication(antecedent, consequent)
    return [parse_literal(piece) for piece in _split_conjuncts(text)]


def _split_conjuncts(text: str) -> list[str]:
    pieces = [piece.strip() for piece in text.split("&")]
    if any(not piece for piece in pieces):
        raise MalformedFormulaText(f"dangling conjunction in {text!r}")
    return pieces


def parse_clause_file(text: str) -> tuple[Clause, ...]:
    """Read a clause file: one formula per line, '#' comments ignored."""
    from .convert import to_clauses

    clauses: list[Clause] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parsed = parse_formula_line(line)
        clauses.extend(to_clauses(parsed))
    return tuple(clauses)
