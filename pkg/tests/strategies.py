"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from speclim.graphs import Graph, MixedGraph, OrientedGraph, SignedGraph


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8, max_extra: int = 8):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    if n >= 3:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        if pairs:
            extra = draw(st.lists(st.sampled_from(pairs), max_size=max_extra, unique=True))
            edges |= set(extra)
    perm = draw(st.permutations(range(n)))
    return Graph(n, frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in edges))


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 10):
    return draw(connected_graphs(min_n=min_n, max_n=max_n, max_extra=0))


@st.composite
def signed_graphs(draw, max_n: int = 8):
    g = draw(connected_graphs(min_n=2, max_n=max_n))
    return SignedGraph(g, {e: draw(st.sampled_from([1, -1])) for e in sorted(g.edges)})


@st.composite
def oriented_graphs(draw, min_n: int = 2, max_n: int = 8, max_extra: int = 8):
    g = draw(connected_graphs(min_n=min_n, max_n=max_n, max_extra=max_extra))
    return OrientedGraph(g, {e: draw(st.sampled_from(e)) for e in sorted(g.edges)})


@st.composite
def mixed_graphs(draw, max_n: int = 7):
    g = draw(connected_graphs(min_n=2, max_n=max_n))
    arcs = set()
    for u, v in sorted(g.edges):
        kind = draw(st.sampled_from(["digon", "fwd", "back"]))
        if kind != "back":
            arcs.add((u, v))
        if kind != "fwd":
            arcs.add((v, u))
    return MixedGraph(g.n, frozenset(arcs))


def subsets(n: int):
    return st.sets(st.integers(0, max(n - 1, 0)), max_size=n)
