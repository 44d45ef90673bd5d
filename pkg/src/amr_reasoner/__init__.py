"""Soft-logic matching of social rules of thumb against situations.

The pipeline: parse Penman AMR into typed trees with node-aligned
embeddings, enumerate merged variants of each tree, convert rules to
implications and situations to ground facts, and prove verdicts with a
resolution prover whose unification is gated on embedding similarity.
"""

from .amr.document import AlignedAmrDocument, attach_embeddings, build_document_tree
from .amr.penman import parse_penman, serialize_penman
from .amr.normalize import normalize
from .amr.tree import AmrTree, Constant, Coreference, Edge, Instance, Merge
from .errors import AmrReasonerError
from .harness.evaluate import (
    CorpusPair,
    EvalMetrics,
    EvalRecord,
    EvalRun,
    bucket_by_collapsability,
    evaluate,
    load_corpus,
)
from .harness.match import MatchConfig, MatchResult, match_tree_sets, match_trees
from .harness.stats import dataset_stats
from .harness.sweep import sweep_axis
from .logic.convert import (
    VerdictLexicon,
    amr_to_formula,
    rot_to_implication,
    sst_to_facts,
    to_clauses,
)
from .logic.formula import Clause, Const, Implication, Literal, Variable
from .logic.notation import format_formula, parse_clause_file, parse_literal
from .merge import (
    MergeConfig,
    MergeTreeSet,
    apply_merge,
    collapsability,
    enumerate_merge_trees,
    is_valid_merge,
    merge_width,
)
from .prover.resolution import Proof, ProofStep, ProverConfig, prove, replay_proof
from .prover.unify import unify_literals
from .similarity import Symbol, cosine, hybrid_similarity, scaled_cosine

__version__ = "0.1.0"

__all__ = [
    "AlignedAmrDocument",
    "AmrReasonerError",
    "AmrTree",
    "Clause",
    "Const",
    "Constant",
    "Coreference",
    "CorpusPair",
    "Edge",
    "EvalMetrics",
    "EvalRecord",
    "EvalRun",
    "Implication",
    "Instance",
    "Literal",
    "MatchConfig",
    "MatchResult",
    "Merge",
    "MergeConfig",
    "MergeTreeSet",
    "Proof",
    "ProofStep",
    "ProverConfig",
    "Symbol",
    "Variable",
    "VerdictLexicon",
    "amr_to_formula",
    "apply_merge",
    "attach_embeddings",
    "bucket_by_collapsability",
    "build_document_tree",
    "collapsability",
    "cosine",
    "dataset_stats",
    "enumerate_merge_trees",
    "evaluate",
    "format_formula",
    "hybrid_similarity",
    "is_valid_merge",
    "load_corpus",
    "match_tree_sets",
    "match_trees",
    "merge_width",
    "normalize",
    "parse_clause_file",
    "parse_literal",
    "parse_penman",
    "prove",
    "replay_proof",
    "rot_to_implication",
    "scaled_cosine",
    "serialize_penman",
    "sst_to_facts",
    "sweep_axis",
    "to_clauses",
    "unify_literals",
]
