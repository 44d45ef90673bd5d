"""Variable substitutions for unification and proof replay."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..logic.formula import Clause, Literal, Term, Variable


@dataclass(frozen=True)
class Substitution:
    """An immutable variable binding map.

    Bindings are stored triangularly (a variable may map to another variable
    bound later); ``walk`` follows chains and ``resolved`` flattens them into
    an idempotent map.
    """

    mapping: dict[Variable, Term] = field(default_factory=dict)

    def walk(self, term: Term) -> Term:
        seen = 0
        while isinstance(term, Variable) and term in self.mapping:
            term = self.mapping[term]
            seen += 1
            if seen > len(self.mapping):
                raise ValueError("cyclic substitution chain")
        return term

    def bind(self, variable: Variable, term: Term) -> "Substitution":
        term = self.walk(term)
        if term == variable:
            return self
        return Substitution({**self.mapping, variable: term})

    def apply_literal(self, literal: Literal) -> Literal:
        args = tuple(self.walk(arg) for arg in literal.args)
        if args == literal.args:
            return literal
        return Literal(literal.positive, literal.predicate, args)

    def apply_clause(self, clause: Clause) -> Clause:
        return Clause(tuple(self.apply_literal(literal) for literal in clause))

    def resolved(self) -> dict[Variable, Term]:
        """The idempotent view: every chain followed to its end."""
        return {variable: self.walk(variable) for variable in self.mapping}

    def compose(self, later: "Substitution") -> "Substitution":
        """The substitution equivalent to applying self, then ``later``."""
        merged: dict[Variable, Term] = {}
        for variable, term in self.mapping.items():
            merged[variable] = later.walk(term) if isinstance(term, Variable) else term
        for variable, term in later.mapping.items():
            if variable not in merged:
                merged[variable] = term
        return Substitution(merged)

    def __len__(self) -> int:
        return len(self.mapping)

    def __str__(self) -> str:
        if not self.mapping:
            return "{}"
        parts = ", ".join(
            f"{variable} -> {term}" for variable, term in sorted(
                self.resolved().items(), key=lambda item: item[0].name
            )
        )
        return "{" + parts + "}"


EMPTY_SUBSTITUTION = Substitution()
