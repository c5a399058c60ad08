"""The fixed graph and hypergraph corpus the verification sweeps run over.

The tree list up to six vertices is intended to be exhaustive up to
isomorphism (1, 1, 2, 3 and 6 trees on 2..6 vertices); the test suite
re-checks that against an independent enumeration rather than trusting
this file.  Everything here is deterministic and cheap to rebuild, so
the corpus is exposed as functions, not module-level constants.
"""

from __future__ import annotations

from .graphs import (
    Graph,
    Hypergraph,
    broom,
    cycle_graph,
    double_star,
    path_graph,
    spider,
    star_graph,
)
from .hypercovers import build_gap_family


def trees_up_to_6() -> list[tuple[str, Graph]]:
    """All trees on 2..6 vertices, one representative per isomorphism class."""
    return [
        ("P2", path_graph(2)),
        ("P3", path_graph(3)),
        ("P4", path_graph(4)),
        ("K1_3", star_graph(3)),
        ("P5", path_graph(5)),
        ("K1_4", star_graph(4)),
        ("S112", spider(1, 1, 2)),  # the chair
        ("P6", path_graph(6)),
        ("K1_5", star_graph(5)),
        ("S113", spider(1, 1, 3)),
        ("S122", spider(1, 2, 2)),
        ("S1112", spider(1, 1, 1, 2)),
        ("DS22", double_star(2, 2)),
    ]


def acceptance_trees() -> list[tuple[str, Graph]]:
    """The closed-form sweep corpus: everything up to 6 vertices plus the
    two 7-vertex stress cases."""
    return trees_up_to_6() + [
        ("P7", path_graph(7)),
        ("K1_6", star_graph(6)),
    ]


def extended_trees() -> list[tuple[str, Graph]]:
    """acceptance_trees plus further 7-vertex caterpillars."""
    return acceptance_trees() + [
        ("broom43", broom(4, 3)),
        ("DS23", double_star(2, 3)),
    ]


def nontree_graphs() -> list[tuple[str, Graph]]:
    return [
        ("C4", cycle_graph(4)),
        ("C5", cycle_graph(5)),
    ]


def graph_corpus() -> list[tuple[str, Graph]]:
    return extended_trees() + nontree_graphs()


def hypergraph_corpus() -> list[tuple[str, Hypergraph]]:
    triangle = Hypergraph.build(
        ("a", "b", "c"), [("a", "b"), ("b", "c"), ("a", "c")]
    )
    one_edge = Hypergraph.build(("a", "b"), [("a", "b")])
    one_triple = Hypergraph.build(("a", "b", "c"), [("a", "b", "c")])
    return [
        ("H1", build_gap_family(1)),
        ("H2", build_gap_family(2)),
        ("H3", build_gap_family(3)),
        ("K3", triangle),
        ("edge", one_edge),
        ("triple", one_triple),
    ]
