"""Normalization: frame-suffix stripping and inverse-role flagging."""

import pytest

from amr_reasoner import normalize, parse_penman
from amr_reasoner.amr.normalize import (
    is_normalized,
    normalize_inverse_roles,
    strip_frame_numbers,
)


@pytest.mark.parametrize(
    ("concept", "stripped"),
    [
        ("go-01", "go"),
        ("hang-up-02", "hang-up"),
        ("have-rel-role-91", "have-rel-role"),
        ("want-01-02", "want"),
        ("i", "i"),
        ("have-rel-role", "have-rel-role"),
    ],
)
def test_strip_frame_numbers(concept, stripped):
    tree = strip_frame_numbers(parse_penman(f"(x / {concept})"))
    assert tree.nodes[tree.root].predicate == stripped


def test_strip_frame_numbers_is_idempotent_and_nondestructive():
    tree = parse_penman("(g / go-01 :ARG0 (b / boy))")
    once = strip_frame_numbers(tree)
    assert strip_frame_numbers(once).canonical_key() == once.canonical_key()
    assert tree.nodes[tree.root].predicate == "go-01"


def test_normalize_inverse_roles_flags_and_rewrites():
    tree = parse_penman("(p / person :ARG0-of (h / help-01))")
    flagged = normalize_inverse_roles(tree)
    edge = flagged.children(flagged.root)[0]
    assert edge.role == ":ARG0"
    assert edge.inverted is True
    # Shape is preserved: the child stays a child, depths are unchanged.
    assert flagged.depth(edge.target) == 1
    again = normalize_inverse_roles(flagged)
    assert again.children(again.root)[0] == edge


def test_normalize_inverse_roles_leaves_plain_roles_alone():
    tree = parse_penman("(p / person :ARG0 (h / help-01))")
    assert normalize_inverse_roles(tree) is tree


def test_is_normalized_tracks_both_passes():
    raw = parse_penman("(p / person :ARG0-of (h / help-01))")
    assert not is_normalized(raw)
    assert not is_normalized(strip_frame_numbers(raw))
    assert is_normalized(normalize(raw))


def test_normalize_keeps_embeddings():
    import numpy as np

    from conftest import embed_labels, unit

    tree = embed_labels(
        parse_penman("(g / go-01 :ARG0 (b / boy))"), {"b": unit(4, 0)}
    )
    normalized = normalize(tree)
    nid = normalized.instance_by_label("b")
    assert np.array_equal(normalized.nodes[nid].embedding, unit(4, 0))
