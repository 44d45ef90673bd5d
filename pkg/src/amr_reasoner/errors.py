"""Exception types shared across the toolkit."""


class AmrReasonerError(Exception):
    """Base class for all toolkit errors."""


class MalformedPenman(AmrReasonerError):
    """Penman text is unbalanced or otherwise unparseable."""


class DuplicateInstanceLabel(AmrReasonerError):
    """The same variable is defined with ``/`` more than once."""


class DanglingCoreference(AmrReasonerError):
    """A coreference node refers to a variable no instance defines."""


class AlignmentMismatch(AmrReasonerError):
    """A node path in an aligned document does not resolve in the tree."""


class DimensionMismatch(AmrReasonerError):
    """Embedding vectors of different lengths were combined."""


class EmptyInput(AmrReasonerError):
    """An operation that needs at least one element got none."""


class DocumentValidationError(AmrReasonerError):
    """An aligned document violates the file-format schema."""


class UnnormalizedTree(AmrReasonerError):
    """Logic conversion was given a tree with frame numbers or raw inverse roles."""


class VerdictUnmapped(AmrReasonerError):
    """A rule's root concept has no verdict mapping."""


class MissingBody(AmrReasonerError):
    """A rule's verdict node has no argument edge to a body."""


class NegationUnsupportedInFacts(AmrReasonerError):
    """A negation is nested under another negation and cannot ground to literals."""


class InvalidMerge(AmrReasonerError):
    """A merge would break negation counts or coreference closure."""


class NoEmbeddings(AmrReasonerError):
    """A collapsed region contains no embeddings to average."""


class UndefinedCollapsability(AmrReasonerError):
    """Collapsability is undefined for single-node trees."""


class ArityMismatch(AmrReasonerError):
    """Unification was called on literals of different arity."""


class MalformedFormulaText(AmrReasonerError):
    """A clause-file line does not parse in the plain-text notation."""


class ResourceCapExceeded(AmrReasonerError):
    """A search or enumeration hit its configured safety cap."""
