"""First-order formula and clause structures.

Terms are variables or constants only — no function symbols exist anywhere in
this system. Embeddings ride along on predicates and constants as match
metadata and never participate in equality or hashing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

import numpy as np

from ..similarity import Symbol


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    symbol: str
    embedding: np.ndarray | None = field(default=None, compare=False)
    quoted: bool = field(default=False, compare=False)

    def as_symbol(self) -> Symbol:
        return Symbol(self.symbol, self.embedding)

    def __str__(self) -> str:
        return f'"{self.symbol}"' if self.quoted else self.symbol


Term = Union[Variable, Const]


@dataclass(frozen=True)
class Literal:
    positive: bool
    predicate: Symbol
    args: tuple[Term, ...]

    def negated(self) -> "Literal":
        return Literal(not self.positive, self.predicate, self.args)

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        rendered = ",".join(str(arg) for arg in self.args)
        sign = "" if self.positive else "!"
        return f"{sign}{self.predicate.name}({rendered})"


@dataclass(frozen=True)
class And:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    variable: Variable
    body: "Formula"


@dataclass(frozen=True)
class Implication:
    antecedent: tuple[Literal, ...]
    consequent: Literal


Formula = Union[Literal, And, Not, Exists, Implication]


@dataclass(frozen=True)
class Clause:
    """An implicit disjunction of literals, variables universally quantified.

    Duplicate literals are removed on construction; first occurrence order is
    kept so rendering and search stay deterministic.
    """

    literals: tuple[Literal, ...]

    def __post_init__(self) -> None:
        seen: set[Literal] = set()
        unique: list[Literal] = []
        for literal in self.literals:
            if literal not in seen:
                seen.add(literal)
                unique.append(literal)
        object.__setattr__(self, "literals", tuple(unique))

    def key(self) -> frozenset[Literal]:
        return frozenset(self.literals)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __str__(self) -> str:
        if self.is_empty:
            return "<empty>"
        return " | ".join(str(literal) for literal in self.literals)


def literal_variables(literal: Literal) -> set[Variable]:
    return {arg for arg in literal.args if isinstance(arg, Variable)}


def clause_variables(clause: Clause) -> set[Variable]:
    out: set[Variable] = set()
    for literal in clause:
        out.update(literal_variables(literal))
    return out
