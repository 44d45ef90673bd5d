"""Text-to-document ingest: parse texts to AMR, embed tokens, write files."""

from .embedding import (
    HashEmbedder,
    TinyRandomEmbedder,
    TransformersLastFourEmbedder,
    build_embedder,
)
from .errors import AmrIngestError, EmbeddingFailure, MalformedInput, ParserFailure
from .parsing import AmrlibParser, ParseResult, RuleBasedParser, build_parser
from .pipeline import Failure, IngestJob, IngestReport, InputRow, ingest, read_input_table

__all__ = [
    "AmrIngestError",
    "AmrlibParser",
    "EmbeddingFailure",
    "Failure",
    "HashEmbedder",
    "IngestJob",
    "IngestReport",
    "InputRow",
    "MalformedInput",
    "ParseResult",
    "ParserFailure",
    "RuleBasedParser",
    "TinyRandomEmbedder",
    "TransformersLastFourEmbedder",
    "build_embedder",
    "build_parser",
    "ingest",
    "read_input_table",
]
