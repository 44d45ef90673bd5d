"""Exception hierarchy for the ingestion pipeline."""


class AmrIngestError(Exception):
    """Base class for every error this package raises on purpose."""


class ParserFailure(AmrIngestError):
    """The AMR parser could not produce a tree for one input text."""


class EmbeddingFailure(AmrIngestError):
    """The embedding model could not produce token vectors."""


class MalformedInput(AmrIngestError):
    """The input table itself is unusable (wrong columns, duplicate ids)."""
