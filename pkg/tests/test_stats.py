"""Corpus-level descriptive statistics."""

import pytest

from amr_reasoner import normalize, parse_penman
from amr_reasoner.errors import EmptyInput
from amr_reasoner.harness.stats import STAT_NAMES, dataset_stats, logic_term_count
from amr_reasoner.merge import MergeConfig, apply_merge, enumerate_merge_trees
from conftest import embed_labels, unit


def tree_of(text: str, embedded: dict | None = None):
    tree = normalize(parse_penman(text))
    return embed_labels(tree, embedded) if embedded else tree


class TestLogicTermCount:
    def test_one_literal_per_concept_and_edge(self):
        tree = tree_of(
            "(h / hang-up-02 :ARG2 (p / person :ARG0-of"
            " (h2 / have-rel-role-91 :ARG1 (i / i) :ARG2 (c / cousin))))"
        )
        assert logic_term_count(tree) == 9

    def test_polarity_edges_produce_no_role_literal(self):
        tree = tree_of("(g / go-01 :polarity - :ARG0 (b / boy))")
        assert logic_term_count(tree) == 3

    def test_constants_contribute_their_edge_only(self):
        tree = tree_of("(b / boy :quant 3)")
        assert logic_term_count(tree) == 2

    def test_merge_nodes_count_as_concepts(self):
        tree = tree_of("(a / alpha :ARG0 (b / beta))", {"b": unit(4, 0)})
        (variant,) = [
            node_id
            for node_id, node in tree.nodes.items()
            if getattr(node, "label", None) == "b"
        ]
        merged = apply_merge(tree, variant, MergeConfig())
        assert logic_term_count(merged) == logic_term_count(tree) == 3


class TestDatasetStats:
    def trees(self):
        return [
            tree_of("(a / alpha :ARG0 (b / beta))", {"a": unit(4, 0), "b": unit(4, 1)}),
            tree_of("(c / gamma)"),
        ]

    def test_reports_every_declared_stat(self):
        stats = dataset_stats(self.trees())
        assert tuple(stats) == STAT_NAMES

    def test_hand_checked_values(self):
        stats = dataset_stats(self.trees())
        assert stats["instance_nodes"].mean == 1.5
        assert stats["instance_nodes"].median == 1.5
        assert stats["instance_nodes"].std == 0.5  # population, not sample
        assert stats["max_depth"].mean == 0.5
        assert stats["logic_terms"].mean == 2.0
        # The two-node tree has one valid collapse, so it contributes the
        # original plus one variant; the single node contributes only itself.
        assert stats["merge_trees"].mean == 1.5

    def test_merge_budget_is_honored(self):
        stats = dataset_stats(self.trees(), MergeConfig(min_merge_depth=2))
        assert stats["merge_trees"].mean == 1.0

    def test_merge_tree_count_matches_enumeration(self):
        tree = self.trees()[0]
        expected = len(enumerate_merge_trees(tree, MergeConfig()))
        assert dataset_stats([tree])["merge_trees"].mean == expected == 2

    def test_empty_corpus_is_an_error(self):
        with pytest.raises(EmptyInput, match="no trees"):
            dataset_stats([])
