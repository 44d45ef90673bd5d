"""Penman text: parsing into trees and serialization back to text."""

import numpy as np
import pytest

from amr_reasoner import parse_penman, serialize_penman
from amr_reasoner.amr.tree import Constant, Coreference, Instance
from amr_reasoner.errors import DuplicateInstanceLabel, MalformedPenman

from conftest import random_tree


def test_parse_single_instance():
    tree = parse_penman("(b / boy)")
    node = tree.nodes[tree.root]
    assert isinstance(node, Instance)
    assert node.label == "b"
    assert node.predicate == "boy"
    assert len(tree) == 1


def test_parse_nested_instances_and_roles():
    tree = parse_penman("(g / go-01 :ARG0 (b / boy) :ARG1 (h / home))")
    roles = [edge.role for edge in tree.children(tree.root)]
    assert roles == [":ARG0", ":ARG1"]
    assert {node.predicate for node in tree.nodes.values() if isinstance(node, Instance)} == {
        "go-01",
        "boy",
        "home",
    }


def test_parse_quoted_and_plain_constants():
    tree = parse_penman('(p / person :named "Mr Krupp" :age 7 :polarity -)')
    constants = [node for node in tree.nodes.values() if isinstance(node, Constant)]
    by_label = {node.label: node for node in constants}
    assert by_label["Mr Krupp"].quoted is True
    assert by_label["7"].quoted is False
    assert by_label["-"].quoted is False


def test_parse_coreference():
    tree = parse_penman("(d / dry-01 :ARG0 (p / person) :ARG1 p)")
    corefs = [node for node in tree.nodes.values() if isinstance(node, Coreference)]
    assert len(corefs) == 1
    assert corefs[0].label == "p"
    assert tree.coreference_ids("p") != []


def test_parse_deeply_nested_with_inverse_role():
    text = (
        "(h / hang-up-02 :ARG2 (p / person :ARG0-of (h2 / have-rel-role-91"
        " :ARG1 (i / i) :ARG2 (c / cousin))))"
    )
    tree = parse_penman(text)
    inverse = [edge for edge in tree.edges if edge.role.endswith("-of")]
    assert len(inverse) == 1
    assert tree.max_depth() == 3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "   ",
        "(b / boy",
        "b / boy)",
        "(b / boy))",
        "(b boy)",
        "(/ boy)",
        "(b /)",
        "(b / boy :ARG0)",
        '(b / boy :named "unterminated)',
        "(b / boy) (c / cow)",
        "(b / boy :ARG0 ())",
    ],
)
def test_parse_rejects_malformed_text(text):
    with pytest.raises(MalformedPenman):
        parse_penman(text)


def test_parse_rejects_duplicate_labels():
    with pytest.raises(DuplicateInstanceLabel):
        parse_penman("(b / boy :ARG0 (b / bear))")


def test_undefined_atom_is_a_constant_not_a_coreference():
    # Labels are prescanned, so a bare atom never dangles: if no instance
    # defines it anywhere in the text, it is read as a plain constant.
    tree = parse_penman("(b / boy :ARG0 q)")
    target = tree.children(tree.root)[0].target
    node = tree.nodes[target]
    assert isinstance(node, Constant)
    assert node.label == "q"


def test_serialize_round_trips_canonical_form():
    text = '(d / dry-01 :polarity - :ARG0 (p / person :named "Mr Krupp") :ARG1 p)'
    tree = parse_penman(text)
    again = parse_penman(serialize_penman(tree))
    assert again.canonical_key() == tree.canonical_key()


def test_serialize_keeps_role_spelling_after_normalization():
    from amr_reasoner import normalize

    tree = normalize(parse_penman("(a / act-01 :ARG0-of (b / binder))"))
    assert ":ARG0-of" in serialize_penman(tree)


def test_serialize_round_trips_random_trees():
    rng = np.random.default_rng(20240818)
    for _ in range(60):
        tree = random_tree(rng, embed_prob=0.0)
        again = parse_penman(serialize_penman(tree))
        assert again.canonical_key() == tree.canonical_key()
