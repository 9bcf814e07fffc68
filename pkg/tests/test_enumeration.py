from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from speclim.enumeration import (adjacency_stack, bounded_radius_codes, canonical_key, connected_codes,
                                 enumerate_connected, enumerate_trees, graph_from_code, rows_of)
from speclim.graphs import Graph, ParameterError

from oracles import connected_graph_classes, nx_graph
from strategies import connected_graphs

# counts of connected graphs and of free trees on n vertices (integer sequences
# A001349 and A000055); the small ones are rederived below by brute force
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235,
               12: 551, 13: 1301, 14: 3159}


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_counts_match_brute_force(n):
    ours = list(enumerate_connected(n))
    ref = connected_graph_classes(n)
    assert len(ours) == len(ref)
    # every brute-force class is hit exactly once
    keys = {canonical_key(g) for g in ours}
    assert len(keys) == len(ours)
    for h in ref:
        g = Graph(n, frozenset(tuple(sorted(e)) for e in h.edges()))
        assert canonical_key(g) in keys


def test_connected_count_seven_matches_graph_atlas():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7 and nx.is_connected(g)]
    assert len(atlas) == CONNECTED_COUNTS[7] == len(connected_codes(7))


@pytest.mark.parametrize("n", [8, 9])
def test_connected_counts_known_values(n):
    assert len(connected_codes(n)) == CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 15))
def test_tree_counts(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == TREE_COUNTS[n]
    assert all(t.is_tree() for t in trees)
    if 2 <= n <= 10:
        assert len(trees) == sum(1 for _ in nx.nonisomorphic_trees(n))


@pytest.mark.parametrize("n", range(2, 10))
def test_trees_pairwise_non_isomorphic(n):
    trees = list(enumerate_trees(n))
    assert len({canonical_key(t) for t in trees}) == len(trees)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_connected_pairwise_non_isomorphic_by_networkx(n):
    graphs = [nx_graph(g) for g in enumerate_connected(n)]
    # compare only within invariant buckets to keep this quadratic step small
    buckets: dict = {}
    for h in graphs:
        key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())))
        for other in buckets.get(key, []):
            assert not nx.is_isomorphic(h, other)
        buckets.setdefault(key, []).append(h)
    assert all(nx.is_connected(h) for h in graphs)


def test_enumeration_is_deterministic():
    a = connected_codes(6).copy()
    connected_codes.cache_clear()
    assert np.array_equal(a, connected_codes(6))
    assert [sorted(t.edges) for t in enumerate_trees(8)] == [sorted(t.edges) for t in enumerate_trees(8)]


def test_size_limits():
    with pytest.raises(ParameterError):
        connected_codes(10)
    with pytest.raises(ParameterError):
        list(enumerate_trees(15))
    with pytest.raises(ParameterError):
        connected_codes(0)


@given(connected_graphs(max_n=9))
def test_canonical_key_is_invariant_under_relabelling(g):
    perm = list(range(g.n))[::-1]
    h = g.relabel(perm)
    assert canonical_key(g) == canonical_key(h)


@given(connected_graphs(max_n=7), connected_graphs(max_n=7))
def test_canonical_key_separates_non_isomorphic(g, h):
    same = g.n == h.n and nx.is_isomorphic(nx_graph(g), nx_graph(h))
    assert (canonical_key(g) == canonical_key(h)) == same


@given(connected_graphs(max_n=9))
def test_code_roundtrip(g):
    assert graph_from_code(rows_of(g)) == g


@pytest.mark.parametrize("n", range(1, 10))
def test_bounded_enumeration_matches_full_filter(n):
    bound = 2.1
    codes = connected_codes(n)
    # independent route: dense eigenvalues of every connected graph, then filter
    radii = np.linalg.eigvalsh(adjacency_stack(codes))[:, -1]
    full = {c.tobytes() for c in codes[radii < bound]}
    got = {c.tobytes() for c in bounded_radius_codes(n, bound)}
    assert got == full
