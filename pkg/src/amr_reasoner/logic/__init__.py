"""First-order logic forms of AMR trees and their plain-text notation."""

from .convert import (
    BAD,
    GOOD,
    VerdictEntry,
    VerdictLexicon,
    amr_to_formula,
    rot_to_implication,
    sst_to_facts,
    to_clauses,
)
from .formula import And, Clause, Const, Exists, Implication, Literal, Not, Variable
from .notation import (
    format_clause,
    format_facts,
    format_formula,
    format_literal,
    parse_clause_file,
    parse_formula_line,
    parse_literal,
)

__all__ = [
    "And",
    "BAD",
    "Clause",
    "Const",
    "Exists",
    "GOOD",
    "Implication",
    "Literal",
    "Not",
    "Variable",
    "VerdictEntry",
    "VerdictLexicon",
    "amr_to_formula",
    "format_clause",
    "format_facts",
    "format_formula",
    "format_literal",
    "parse_clause_file",
    "parse_formula_line",
    "parse_literal",
    "rot_to_implication",
    "sst_to_facts",
    "to_clauses",
]
