"""Similarity-gated unification and input-resolution proof search."""

from .resolution import (
    Proof,
    ProofSearchResult,
    ProofStep,
    ProverConfig,
    prove,
    replay_proof,
    resolve,
)
from .substitution import EMPTY_SUBSTITUTION, Substitution
from .unify import SimilarityFn, UnifyResult, unify_literals

__all__ = [
    "EMPTY_SUBSTITUTION",
    "Proof",
    "ProofSearchResult",
    "ProofStep",
    "ProverConfig",
    "SimilarityFn",
    "Substitution",
    "UnifyResult",
    "prove",
    "replay_proof",
    "resolve",
    "unify_literals",
]
