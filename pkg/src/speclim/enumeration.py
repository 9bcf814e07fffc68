"""Isomorph-free enumeration of small connected graphs and trees."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _canon
from .graphs import Graph, ParameterError

MAX_CONNECTED = 9
MAX_TREES = 14


def graph_from_code(code) -> Graph:
    n = len(code)
    edges = set()
    for u in range(n):
        row = int(code[u])
        for v in range(u + 1, n):
            if (row >> v) & 1:
                edges.add((u, v))
    return Graph(n, frozenset(edges))


def rows_of(g: Graph) -> np.ndarray:
    a = np.zeros(g.n, dtype=np.uint32)
    for u, v in g.edges:
        a[u] |= np.uint32(1 << v)
        a[v] |= np.uint32(1 << u)
    return a


def canonical_key(g: Graph) -> bytes:
    """Bytes that are equal exactly for isomorphic graphs (n <= 14)."""
    if g.n > _canon.MAX_N:
        raise ParameterError(f"canonical forms are limited to {_canon.MAX_N} vertices")
    if g.n == 0:
        return b""
    return _canon.canonical_code(rows_of(g), g.n).tobytes()


def adjacency_stack(codes: np.ndarray) -> np.ndarray:
    """0/1 adjacency matrices for an array of row-bitmask codes."""
    n = codes.shape[1]
    bits = (codes[:, :, None] >> np.arange(n, dtype=np.uint32)[None, None, :]) & 1
    return bits.astype(np.float64)


@lru_cache(maxsize=None)
def connected_codes(n: int) -> np.ndarray:
    """Canonical codes of all connected graphs on n vertices, sorted."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if n > MAX_CONNECTED:
        raise ParameterError(f"connected enumeration is limited to n <= {MAX_CONNECTED}")
    if n == 1:
        return np.zeros((1, 1), dtype=np.uint32)
    # every connected graph has a non-cut vertex, so it arises from a connected parent
    kids = _canon.vertex_children(connected_codes(n - 1), n - 1)
    return np.unique(kids, axis=0)


def enumerate_connected(n: int) -> Iterator[Graph]:
    for code in connected_codes(n):
        yield graph_from_code(code)


# ---------------------------------------------------------------------------
# trees


def _ahu(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_ahu(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_key(adj: list[list[int]]) -> str:
    """Canonical string of a free tree: the least AHU string over its centers."""
    return min(_ahu(adj, c, -1) for c in _centers(adj))


@lru_cache(maxsize=None)
def _tree_adjs(n: int) -> tuple:
    if n < 1:
        raise ParameterError("n must be >= 1")
    if n > MAX_TREES:
        raise ParameterError(f"tree enumeration is limited to n <= {MAX_TREES}")
    if n == 1:
        return (((),),)
    seen: dict[str, tuple] = {}
    for adj in _tree_adjs(n - 1):
        for v in range(n - 1):
            new = [list(a) for a in adj] + [[v]]
            new[v].append(n - 1)
            key = tree_key(new)
            if key not in seen:
                seen[key] = tuple(tuple(a) for a in new)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_trees(n: int) -> Iterator[Graph]:
    for adj in _tree_adjs(n):
        yield Graph(n, frozenset((u, v) for u in range(n) for v in adj[u] if u < v))


# ---------------------------------------------------------------------------
# graphs with bounded adjacency index


@lru_cache(maxsize=None)
def bounded_radius_codes(n: int, bound: float) -> np.ndarray:
    """Canonical codes of connected graphs on n vertices with adjacency index < bound.

    The class is closed under taking connected induced subgraphs, and every
    connected graph has a vertex whose removal keeps it connected, so growing
    members one vertex at a time reaches all of them.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    if n > 12:
        raise ParameterError("bounded enumeration is limited to n <= 12")
    if n == 1:
        return np.zeros((1, 1), dtype=np.uint32)
    parents = bounded_radius_codes(n - 1, bound)
    if parents.shape[0] == 0:
        return parents.reshape(0, n)
    # index < bound forces max degree <= bound^2, which also caps the new vertex's degree
    dmax = int(np.floor(bound * bound + 1e-12))
    kids = _canon.vertex_children_limited(parents, n - 1, dmax, dmax)
    kids = np.unique(kids, axis=0)
    if kids.shape[0] == 0:
        return kids
    rad = np.linalg.eigvalsh(adjacency_stack(kids))[:, -1]
    return kids[rad < bound]
