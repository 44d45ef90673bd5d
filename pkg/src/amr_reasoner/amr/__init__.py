"""AMR parsing, normalization, and aligned-document handling."""

from .document import AlignedAmrDocument, attach_embeddings, build_document_tree
from .normalize import is_normalized, normalize, normalize_inverse_roles, strip_frame_numbers
from .penman import parse_penman, serialize_penman
from .tree import AmrNode, AmrTree, Constant, Coreference, Edge, Instance, Merge

__all__ = [
    "AlignedAmrDocument",
    "AmrNode",
    "AmrTree",
    "Constant",
    "Coreference",
    "Edge",
    "Instance",
    "Merge",
    "attach_embeddings",
    "build_document_tree",
    "is_normalized",
    "normalize",
    "normalize_inverse_roles",
    "parse_penman",
    "serialize_penman",
    "strip_frame_numbers",
]
