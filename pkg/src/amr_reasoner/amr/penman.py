"""Penman-notation parsing and serialization.

The grammar accepted here is the parenthesized tree form::

    node   := '(' label '/' concept relation* ')'
    relation := role target
    target := node | label | constant | '"' string '"'

A bare atom in target position is a coreference when its label is defined by
an instance anywhere in the text (forward references included), and a constant
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MalformedPenman
from .tree import AmrNode, AmrTree, Constant, Coreference, Edge, Instance, Merge

_PUNCT = {"(", ")", "/"}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'punct' | 'atom' | 'string'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token("punct", ch, i))
            i += 1
            continue
        if ch == '"':
            end = text.find('"', i + 1)
            if end == -1:
                raise MalformedPenman(f"unterminated string starting at offset {i}")
            tokens.append(_Token("string", text[i + 1 : end], i))
            i = end + 1
            continue
        start = i
        while i < length and not text[i].isspace() and text[i] not in _PUNCT and text[i] != '"':
            i += 1
        tokens.append(_Token("atom", text[start:i], start))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], defined_labels: set[str]):
        self.tokens = tokens
        self.defined = defined_labels
        self.index = 0
        self.nodes: dict[int, AmrNode] = {}
        self.edges: list[Edge] = []
        self.next_id = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _take(self) -> _Token:
        token = self._peek()
        if token is None:
            raise MalformedPenman("unexpected end of input")
        self.index += 1
        return token

    def _expect_punct(self, text: str) -> None:
        token = self._take()
        if token.kind != "punct" or token.text != text:
            raise MalformedPenman(f"expected {text!r} at offset {token.pos}, found {token.text!r}")

    def _add_node(self, node: AmrNode) -> int:
        nid = self.next_id
        self.next_id += 1
        self.nodes[nid] = node
        return nid

    def parse_node(self) -> int:
        self._expect_punct("(")
        label = self._take()
        if label.kind != "atom":
            raise MalformedPenman(f"expected variable label at offset {label.pos}")
        self._expect_punct("/")
        concept = self._take()
        if concept.kind != "atom":
            raise MalformedPenman(f"expected concept after '/' at offset {concept.pos}")
        nid = self._add_node(Instance(label=label.text, predicate=concept.text))
        while True:
            token = self._peek()
            if token is None:
                raise MalformedPenman("unexpected end of input inside node")
            if token.kind == "punct" and token.text == ")":
                self._take()
                return nid
            role = self._take()
            if role.kind != "atom" or not role.text.startswith(":"):
                raise MalformedPenman(f"expected ':role' at offset {role.pos}, found {role.text!r}")
            target_id = self.parse_target()
            self.edges.append(Edge(source=nid, target=target_id, role=role.text))

    def parse_target(self) -> int:
        token = self._peek()
        if token is None:
            raise MalformedPenman("missing edge target")
        if token.kind == "punct" and token.text == "(":
            return self.parse_node()
        token = self._take()
        if token.kind == "string":
            return self._add_node(Constant(label=token.text, quoted=True))
        if token.kind == "atom":
            if token.text in self.defined:
                return self._add_node(Coreference(label=token.text))
            return self._add_node(Constant(label=token.text))
        raise MalformedPenman(f"unexpected {token.text!r} at offset {token.pos}")


def _defined_labels(tokens: list[_Token]) -> set[str]:
    labels: set[str] = set()
    for i in range(len(tokens) - 2):
        opener, label, slash = tokens[i : i + 3]
        if (
            opener.kind == "punct"
            and opener.text == "("
            and label.kind == "atom"
            and slash.kind == "punct"
            and slash.text == "/"
        ):
            labels.add(label.text)
    return labels


def parse_penman(text: str) -> AmrTree:
    """Parse Penman text into a tree; raises MalformedPenman on bad input."""
    tokens = _tokenize(text)
    if not tokens:
        raise MalformedPenman("empty input")
    parser = _Parser(tokens, _defined_labels(tokens))
    root = parser.parse_node()
    if parser.index != len(tokens):
        extra = tokens[parser.index]
        raise MalformedPenman(f"trailing input at offset {extra.pos}: {extra.text!r}")
    return AmrTree(parser.nodes, parser.edges, root)


def serialize_penman(tree: AmrTree, indent: int = 4) -> str:
    """Render a tree back to Penman text (multi-line, children indented)."""

    def render(nid: int, depth: int) -> str:
        node = tree.nodes[nid]
        if isinstance(node, Constant):
            return f'"{node.label}"' if node.quoted else node.label
        if isinstance(node, Coreference):
            return node.label
        if isinstance(node, Merge):
            raise MalformedPenman("merge nodes have no Penman form; use a tree listing instead")
        assert isinstance(node, Instance)
        head = f"({node.label} / {node.predicate}"
        children = tree.children(nid)
        if not children:
            return head + ")"
        pad = "\n" + " " * (indent * (depth + 1))
        parts = [
            f"{pad}{edge.role}{'-of' if edge.inverted else ''} {render(edge.target, depth + 1)}"
            for edge in children
        ]
        return head + "".join(parts) + ")"

    return render(tree.root, 0)
