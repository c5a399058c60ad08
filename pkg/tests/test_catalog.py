"""Sanity checks for the canned graph and hypergraph collections.

The tree list is compared against networkx's exhaustive enumeration so
that "all trees on up to six vertices" is a verified claim rather than a
hand count.
"""

import networkx as nx

from covertool.catalog import (
    acceptance_trees,
    extended_trees,
    graph_corpus,
    hypergraph_corpus,
    nontree_graphs,
    trees_up_to_6,
)


def to_nx(g):
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(tuple(e) for e in g.edges)
    return out


def test_names_unique():
    names = [name for name, _ in graph_corpus()]
    assert len(names) == len(set(names))


def test_all_trees_are_trees():
    for name, g in extended_trees():
        assert g.is_tree(), name


def test_trees_up_to_6_is_exhaustive():
    ours = [to_nx(g) for _, g in trees_up_to_6()]
    for a, b in zip(ours, ours[1:]):
        assert len(a) <= len(b)
    by_size = {}
    for t in ours:
        by_size.setdefault(len(t), []).append(t)
    for n in range(2, 7):
        reference = list(nx.nonisomorphic_trees(n))
        mine = by_size.get(n, [])
        assert len(mine) == len(reference), n
        for ref in reference:
            assert sum(1 for t in mine if nx.is_isomorphic(t, ref)) == 1, n


def test_acceptance_trees_add_seven_vertex_rows():
    extra = dict(acceptance_trees()).keys() - dict(trees_up_to_6()).keys()
    assert extra == {"P7", "K1_6"}
    sizes = {name: g.n for name, g in acceptance_trees()}
    assert sizes["P7"] == 7 and sizes["K1_6"] == 7


def test_nontrees_are_connected_non_trees():
    for name, g in nontree_graphs():
        assert g.is_connected() and not g.is_tree(), name


def test_hypergraph_corpus_is_simple():
    for name, h in hypergraph_corpus():
        sets = [set(e) for e in h.edges]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j:
                    assert not a <= b, name
