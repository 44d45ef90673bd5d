"""Text to Penman with token alignments.

Two parser backends share one output contract, ``ParseResult``:

- ``AmrlibParser`` wraps an external pretrained sequence-to-graph model and
  is loaded lazily, so the package works where that model is not installed.
- ``RuleBasedParser`` is a deterministic grammar over a small verb/adjective
  lexicon. It covers the short imperative-norm and first-person-situation
  shapes this pipeline ingests (copular norms, transitive clauses, control
  verbs, particles, attributive modifiers, negation) and fails loudly on
  anything else instead of guessing.

Alignment paths use the document format's addressing: ``""`` is the root,
an edge step is ``<role>.<ordinal>`` among the parent's same-role children,
and steps join with ``/``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParserFailure

_TOKEN_PATTERN = re.compile(r"n't|'[A-Za-z]+|[A-Za-z]+|\d+|[^\sA-Za-z\d]")

_DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those",
    "my", "your", "his", "its", "our", "their", "some", "any",
}
_AUXILIARIES = {"do", "does", "did", "will", "would", "can", "could", "should", "may", "might"}
_COPULAS = {"is", "are", "was", "were", "am", "be", "'s", "'re", "'m"}
_NEGATIONS = {"not", "n't", "never"}
_PREPOSITIONS = {"to", "on", "at", "with", "for", "about", "in", "from", "of", "up"}
_PUNCTUATION = re.compile(r"[^\sA-Za-z\d]")

# Pronoun surface -> concept; object forms also corefer to the matrix
# subject when they appear inside an embedded clause.
_PRONOUNS = {
    "i": "i", "me": "i", "he": "he", "him": "he", "she": "she", "her": "she",
    "it": "it", "we": "we", "us": "we", "they": "they", "them": "they",
    "you": "you", "someone": "someone", "somebody": "somebody",
    "anyone": "anyone", "everyone": "everyone",
}
_OBJECT_PRONOUNS = {"him", "her", "them", "me", "us"}

# Predicative adjectives usable as "it is ADJ to ..." rule roots.
_PREDICATIVE = {
    "rude": "rude-01", "good": "good-02", "bad": "bad-07", "nice": "nice-01",
    "mean": "mean-04", "kind": "kind-01", "wrong": "wrong-02", "fine": "fine-04",
    "okay": "okay-04", "polite": "polite-01", "impolite": "impolite-01",
    "important": "important-01", "terrible": "terrible-01", "hurtful": "hurtful-01",
}

# Attributive adjectives become :mod children with their surface as concept.
_ATTRIBUTIVE = {
    "white", "brown", "black", "red", "cute", "loud", "quiet", "small", "big",
    "little", "old", "new", "young", "dirty", "clean", "happy", "sad", "angry",
    "broken", "favorite",
}


def _forms(lemma: str, *extra: str) -> tuple[str, ...]:
    base = [lemma, lemma + "s", lemma + "ed", lemma + "ing"]
    if lemma.endswith("e"):
        base += [lemma + "d", lemma[:-1] + "ing"]
    return tuple(dict.fromkeys(base + list(extra)))


@dataclass(frozen=True)
class _VerbEntry:
    frame: str
    particle: str | None = None
    prep_roles: dict[str, str] = field(default_factory=dict)


def _verb_lexicon() -> dict[str, _VerbEntry]:
    table: dict[str, _VerbEntry] = {}

    def add(entry: _VerbEntry, forms: tuple[str, ...]) -> None:
        for form in forms:
            table[form] = entry

    add(_VerbEntry("want-01"), _forms("want"))
    add(_VerbEntry("believe-01"), _forms("believe"))
    add(_VerbEntry("go-01"), _forms("go", "goes", "went", "gone"))
    add(_VerbEntry("hang-up-02", particle="up", prep_roles={"on": ":ARG2"}),
        _forms("hang", "hung"))
    add(_VerbEntry("share-01", prep_roles={"with": ":ARG2"}), _forms("share"))
    add(_VerbEntry("help-01"), _forms("help"))
    add(_VerbEntry("interrupt-01"), _forms("interrupt"))
    add(_VerbEntry("pet-01"), _forms("pet", "petted", "petting"))
    add(_VerbEntry("walk-01"), _forms("walk"))
    add(_VerbEntry("chew-01", prep_roles={"on": ":ARG1"}), _forms("chew"))
    add(_VerbEntry("tease-01"), _forms("tease"))
    add(_VerbEntry("yell-01", prep_roles={"at": ":ARG2"}), _forms("yell"))
    add(_VerbEntry("talk-01", prep_roles={"about": ":ARG1"}), _forms("talk"))
    add(_VerbEntry("eat-01"), _forms("eat", "ate", "eaten"))
    add(_VerbEntry("play-01", prep_roles={"with": ":ARG2"}), _forms("play"))
    add(_VerbEntry("take-01"), _forms("take", "took", "taken"))
    add(_VerbEntry("give-01"), _forms("give", "gave", "given"))
    add(_VerbEntry("hit-01"), _forms("hit", "hitting"))
    add(_VerbEntry("push-01"), _forms("push", "pushes"))
    add(_VerbEntry("thank-01"), _forms("thank"))
    add(_VerbEntry("visit-01"), _forms("visit"))
    add(_VerbEntry("invite-01"), _forms("invite"))
    add(_VerbEntry("ignore-01"), _forms("ignore"))
    add(_VerbEntry("insult-01"), _forms("insult"))
    add(_VerbEntry("apologize-01", prep_roles={"for": ":ARG1"}), _forms("apologize"))
    add(_VerbEntry("borrow-01"), _forms("borrow"))
    add(_VerbEntry("steal-01"), _forms("steal", "stole", "stolen"))
    add(_VerbEntry("leave-01"), _forms("leave", "left"))
    add(_VerbEntry("say-01"), _forms("say", "said"))
    add(_VerbEntry("lie-02"), _forms("lie", "lied", "lying"))
    add(_VerbEntry("laugh-01", prep_roles={"at": ":ARG2"}), _forms("laugh"))
    add(_VerbEntry("shout-01", prep_roles={"at": ":ARG2"}), _forms("shout"))
    add(_VerbEntry("wait-01", prep_roles={"for": ":ARG1"}), _forms("wait"))
    add(_VerbEntry("ask-01", prep_roles={"for": ":ARG2"}), _forms("ask"))
    add(_VerbEntry("call-02"), _forms("call"))
    add(_VerbEntry("smile-01", prep_roles={"at": ":ARG2"}), _forms("smile"))
    return table


_VERBS = _verb_lexicon()


@dataclass(frozen=True)
class ParseResult:
    """One parsed text: Penman plus the evidence linking nodes to tokens."""

    penman: str
    tokens: tuple[str, ...]
    alignments: dict[str, tuple[int, ...]]


@dataclass
class _Node:
    concept: str
    aligned: tuple[int, ...]
    edges: list[tuple[str, object]] = field(default_factory=list)
    negated: bool = False


@dataclass(frozen=True)
class _Ref:
    """A later mention rendered as a bare variable of ``target``."""

    target: _Node


class _Words:
    """Cursor over (token index, lowercased word), punctuation dropped."""

    def __init__(self, tokens: tuple[str, ...]):
        self.items = [
            (position, token.lower())
            for position, token in enumerate(tokens)
            if not _PUNCTUATION.fullmatch(token)
        ]
        self.at = 0

    def done(self) -> bool:
        return self.at >= len(self.items)

    def peek(self, offset: int = 0) -> str | None:
        position = self.at + offset
        return self.items[position][1] if position < len(self.items) else None

    def take(self) -> tuple[int, str]:
        item = self.items[self.at]
        self.at += 1
        return item


class RuleBasedParser:
    """Deterministic grammar parser; identical input yields identical output."""

    def parse(self, text: str) -> ParseResult:
        tokens = tuple(_TOKEN_PATTERN.findall(text))
        if not tokens:
            raise ParserFailure("empty input text")
        words = _Words(tokens)
        root = self._sentence(words)
        if not words.done():
            _, leftover = words.take()
            raise ParserFailure(f"unparsed trailing words starting at {leftover!r}")
        penman, alignments = _render(root)
        return ParseResult(penman=penman, tokens=tokens, alignments=alignments)

    # -- grammar ------------------------------------------------------------------

    def _sentence(self, words: _Words) -> _Node:
        if words.peek() == "it" and words.peek(1) in _COPULAS:
            return self._norm(words)
        subject = self._noun_phrase(words)
        if subject is None:
            raise ParserFailure(f"expected a subject, found {words.peek()!r}")
        negated = False
        while words.peek() in _AUXILIARIES or words.peek() in _NEGATIONS:
            _, word = words.take()
            negated = negated or word in _NEGATIONS
        clause = self._verb_phrase(words, subject=subject, matrix_subject=None)
        clause.negated = clause.negated or negated
        return clause

    def _norm(self, words: _Words) -> _Node:
        """``it is (not)? ADJ to VP`` — a judgment over an agentless clause."""
        words.take()  # it
        words.take()  # copula
        negated = False
        while words.peek() in _NEGATIONS:
            words.take()
            negated = True
        if words.peek() not in _PREDICATIVE:
            raise ParserFailure(f"no judgment adjective, found {words.peek()!r}")
        position, adjective = words.take()
        root = _Node(_PREDICATIVE[adjective], (position,), negated=negated)
        if words.peek() != "to":
            raise ParserFailure(f"expected 'to' after {adjective!r}, found {words.peek()!r}")
        words.take()
        clause = self._verb_phrase(words, subject=None, matrix_subject=None)
        root.edges.append((":ARG1", clause))
        return root

    def _verb_phrase(self, words: _Words, subject, matrix_subject) -> _Node:
        if words.done():
            raise ParserFailure("expected a verb, found end of text")
        position, word = words.take()
        entry = _VERBS.get(word)
        if entry is None:
            raise ParserFailure(f"unknown verb {word!r}")
        aligned = [position]
        if entry.particle and words.peek() == entry.particle:
            particle_position, _ = words.take()
            aligned.append(particle_position)
        verb = _Node(entry.frame, tuple(aligned))
        if subject is not None:
            verb.edges.append((":ARG0", subject))

        objects: list[_Node] = []
        obliques: list[tuple[str, object]] = []
        embedded: _Node | None = None
        controller = subject if subject is not None else matrix_subject
        while not words.done():
            word = words.peek()
            if word in _NEGATIONS:
                words.take()
                verb.negated = True
                continue
            if word == "to" and words.peek(1) in _VERBS:
                words.take()
                inner_subject = objects.pop() if objects else _ref_or_none(subject)
                embedded = self._verb_phrase(
                    words, subject=inner_subject, matrix_subject=controller
                )
                continue
            if word in entry.prep_roles:
                _, prep = words.take()
                target = self._noun_phrase(words, matrix_subject=matrix_subject)
                if target is None:
                    raise ParserFailure(f"no object after {prep!r}")
                obliques.append((entry.prep_roles[prep], target))
                continue
            noun = self._noun_phrase(words, matrix_subject=matrix_subject)
            if noun is None:
                break
            objects.append(noun)
        if embedded is not None:
            verb.edges.append((":ARG1", embedded))
        for noun in objects:
            verb.edges.append((":ARG1", noun))
        verb.edges.extend(obliques)
        return verb

    def _noun_phrase(self, words: _Words, matrix_subject=None):
        modifiers: list[tuple[int, str]] = []
        while self._starts_noun_phrase(words) or words.peek() in _ATTRIBUTIVE:
            position, word = words.take()
            if word in _ATTRIBUTIVE:
                modifiers.append((position, word))
        word = words.peek()
        if (
            word is None
            or word in _VERBS
            or word in _COPULAS
            or word in _AUXILIARIES
            or word in _PREPOSITIONS
        ):
            if modifiers:
                raise ParserFailure(f"modifiers {modifiers!r} without a head noun")
            return None
        position, word = words.take()
        if word in _PRONOUNS:
            if word in _OBJECT_PRONOUNS and isinstance(matrix_subject, _Node):
                return _Ref(matrix_subject)
            head = _Node(_PRONOUNS[word], (position,))
        else:
            head = _Node(word, (position,))
        for modifier_position, modifier in modifiers:
            head.edges.append((":mod", _Node(modifier, (modifier_position,))))
        return head

    @staticmethod
    def _starts_noun_phrase(words: _Words) -> bool:
        """Determiner check; ``her`` counts only when a head word follows."""
        word = words.peek()
        if word in _DETERMINERS:
            return True
        if word != "her":
            return False
        following = words.peek(1)
        return following is not None and following not in _VERBS and following != "to"


def _ref_or_none(subject):
    return _Ref(subject) if isinstance(subject, _Node) else None


# -- rendering --------------------------------------------------------------------


def _render(root: _Node) -> tuple[str, dict[str, tuple[int, ...]]]:
    variables: dict[int, str] = {}
    used: dict[str, int] = {}
    alignments: dict[str, tuple[int, ...]] = {}

    def variable(node: _Node) -> str:
        if id(node) not in variables:
            letter = node.concept[0]
            used[letter] = used.get(letter, 0) + 1
            count = used[letter]
            variables[id(node)] = letter if count == 1 else f"{letter}{count}"
        return variables[id(node)]

    def walk(node: _Node, path: str) -> str:
        alignments[path] = node.aligned
        parts = [f"({variable(node)} / {node.concept}"]
        if node.negated:
            parts.append(":polarity -")
        ordinals: dict[str, int] = {}
        for role, child in node.edges:
            ordinal = ordinals.get(role, 0)
            ordinals[role] = ordinal + 1
            step = f"{role}.{ordinal}"
            child_path = f"{path}/{step}" if path else step
            if isinstance(child, _Ref):
                parts.append(f"{role} {variable(child.target)}")
            else:
                parts.append(f"{role} {walk(child, child_path)}")
        return " ".join(parts) + ")"

    penman = walk(root, "")
    return penman, alignments


# -- external parser --------------------------------------------------------------


class AmrlibParser:
    """Wrapper for a pretrained sequence-to-graph AMR model.

    The model library and weights load on first use; when they are missing
    the failure surfaces as ``ParserFailure`` so a batch can record it and
    move on. Alignments come from the model's own metadata when present;
    nodes the model leaves unaligned simply get no embedding downstream.
    """

    def __init__(self, model_id: str):
        self.model_id = model_id
        self._model = None

    def _load(self):
        try:
            import amrlib
        except ImportError as error:
            raise ParserFailure(
                f"AMR parser {self.model_id!r} unavailable: {error}"
            ) from error
        try:
            self._model = amrlib.load_stog_model(model_dir=self.model_id)
        except Exception as error:
            raise ParserFailure(
                f"AMR parser {self.model_id!r} failed to load: {error}"
            ) from error

    def parse(self, text: str) -> ParseResult:
        if not text.strip():
            raise ParserFailure("empty input text")
        if self._model is None:
            self._load()
        try:
            graphs = self._model.parse_sents([text], add_metadata=True)
        except Exception as error:
            raise ParserFailure(f"parse failed: {error}") from error
        if not graphs or not graphs[0]:
            raise ParserFailure("parser returned no graph")
        return _from_metadata_graph(graphs[0], text)


def _from_metadata_graph(graph: str, text: str) -> ParseResult:
    """Split a ``# ::key value`` annotated graph into the result fields."""
    tokens: tuple[str, ...] = ()
    body: list[str] = []
    for line in graph.splitlines():
        if line.startswith("# ::tok "):
            tokens = tuple(line[len("# ::tok "):].split())
        elif not line.startswith("#"):
            body.append(line)
    if not tokens:
        tokens = tuple(text.split())
    penman = "\n".join(body).strip()
    if not penman.startswith("("):
        raise ParserFailure("parser output is not a Penman graph")
    return ParseResult(penman=penman, tokens=tokens, alignments={})


def build_parser(model_id: str):
    """``rule-based`` selects the deterministic grammar; anything else names
    a pretrained model directory for the external parser."""
    if model_id == "rule-based":
        return RuleBasedParser()
    return AmrlibParser(model_id)
