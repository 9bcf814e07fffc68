"""Canonical labeling of small graphs (numba kernels).

A graph on n <= 14 vertices is a vector of row bitmasks.  Its canonical code is
the lexicographically least row-bitmask vector over all labelings reachable by
equitable refinement plus individualization, which is a complete invariant
because the search tree itself is labeling-invariant.  Automorphisms found at
equal leaves prune sibling subtrees.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_N = 14
_MAX_AUTS = 64


@njit(cache=True)
def _refine(adj, col, n):
    """Equitable refinement of an ordered coloring, in place.  Returns the number of cells."""
    key = np.empty(n, dtype=np.int64)
    cnt = np.zeros(n, dtype=np.int64)
    ncol = 0
    for v in range(n):
        if col[v] + 1 > ncol:
            ncol = col[v] + 1
    while True:
        for v in range(n):
            for c in range(ncol):
                cnt[c] = 0
            row = adj[v]
            for w in range(n):
                if (row >> w) & 1:
                    cnt[col[w]] += 1
            k = np.int64(col[v])
            for c in range(ncol):
                k = k * 16 + cnt[c]
            key[v] = k
        order = np.argsort(key, kind="mergesort")
        new = 0
        prev = key[order[0]]
        col[order[0]] = 0
        for i in range(1, n):
            kk = key[order[i]]
            if kk != prev:
                new += 1
                prev = kk
            col[order[i]] = new
        new += 1
        if new == ncol:
            return ncol
        ncol = new


@njit(cache=True)
def _leaf_code(adj, col, n, out):
    inv = np.empty(n, dtype=np.int64)
    for v in range(n):
        inv[col[v]] = v
    for p in range(n):
        row = adj[inv[p]]
        word = np.uint32(0)
        for q in range(n):
            if (row >> inv[q]) & 1:
                word |= np.uint32(1) << np.uint32(q)
        out[p] = word


@njit(cache=True)
def _cmp(a, b, n):
    for i in range(n):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def canonical_code(adj, n):
    """Canonical row-bitmask code of the graph with rows ``adj[:n]``."""
    best = np.empty(n, dtype=np.uint32)
    best_col = np.empty(n, dtype=np.int64)
    cur = np.empty(n, dtype=np.uint32)
    if n == 0:
        return best
    have_best = False

    cols = np.zeros((n + 1, n), dtype=np.int64)
    cands = np.zeros((n + 1, n), dtype=np.int64)
    ncand = np.zeros(n + 1, dtype=np.int64)
    pos = np.zeros(n + 1, dtype=np.int64)
    fixed = np.zeros(n + 1, dtype=np.int64)
    auts = np.zeros((_MAX_AUTS, n), dtype=np.int64)
    naut = 0
    parent = np.empty(n, dtype=np.int64)

    col = cols[0]
    ncells = _refine(adj, col, n)

    depth = 0
    # set up node at depth 0
    if ncells == n:
        _leaf_code(adj, col, n, best)
        return best
    # choose target cell: lowest color with more than one vertex
    size = np.zeros(n, dtype=np.int64)
    for v in range(n):
        size[col[v]] += 1
    tc = 0
    while size[tc] < 2:
        tc += 1
    k = 0
    for v in range(n):
        if col[v] == tc:
            cands[0, k] = v
            k += 1
    ncand[0] = k
    pos[0] = 0

    while depth >= 0:
        if pos[depth] >= ncand[depth]:
            depth -= 1
            if depth >= 0:
                pos[depth] += 1
            continue
        w = cands[depth, pos[depth]]
        # orbit pruning against earlier siblings
        if pos[depth] > 0 and naut > 0:
            for v in range(n):
                parent[v] = v
            for a in range(naut):
                ok = True
                for d in range(depth):
                    if auts[a, fixed[d]] != fixed[d]:
                        ok = False
                        break
                if ok:
                    for v in range(n):
                        ra = _find(parent, v)
                        rb = _find(parent, auts[a, v])
                        if ra != rb:
                            parent[ra] = rb
            rw = _find(parent, w)
            skip = False
            for j in range(pos[depth]):
                if _find(parent, cands[depth, j]) == rw:
                    skip = True
                    break
            if skip:
                pos[depth] += 1
                continue
        # individualize w
        src = cols[depth]
        dst = cols[depth + 1]
        c = src[w]
        for v in range(n):
            if src[v] > c or (src[v] == c and v != w):
                dst[v] = src[v] + 1
            else:
                dst[v] = src[v]
        fixed[depth] = w
        ncells = _refine(adj, dst, n)
        if ncells == n:
            _leaf_code(adj, dst, n, cur)
            if not have_best:
                for i in range(n):
                    best[i] = cur[i]
                    best_col[i] = dst[i]
                have_best = True
            else:
                r = _cmp(cur, best, n)
                if r < 0:
                    for i in range(n):
                        best[i] = cur[i]
                        best_col[i] = dst[i]
                elif r == 0 and naut < _MAX_AUTS:
                    # vertex at position p in the best leaf maps to the one here
                    for v in range(n):
                        for u in range(n):
                            if dst[u] == best_col[v]:
                                auts[naut, v] = u
                                break
                    naut += 1
            pos[depth] += 1
            continue
        # descend
        depth += 1
        for i in range(n):
            size[i] = 0
        for v in range(n):
            size[dst[v]] += 1
        tc = 0
        while size[tc] < 2:
            tc += 1
        k = 0
        for v in range(n):
            if dst[v] == tc:
                cands[depth, k] = v
                k += 1
        ncand[depth] = k
        pos[depth] = 0
    return best


@njit(cache=True)
def canonical_codes(adjs, n):
    m = adjs.shape[0]
    out = np.empty((m, n), dtype=np.uint32)
    for i in range(m):
        out[i] = canonical_code(adjs[i], n)
    return out


@njit(cache=True)
def vertex_children(parents, n):
    """All graphs on n + 1 vertices made by joining a new vertex to a non-empty
    subset of each parent's vertices, returned as canonical codes."""
    m = parents.shape[0]
    nsub = (1 << n) - 1
    out = np.empty((m * nsub, n + 1), dtype=np.uint32)
    adj = np.empty(n + 1, dtype=np.uint32)
    k = 0
    for i in range(m):
        for s in range(1, nsub + 1):
            for v in range(n):
                adj[v] = parents[i, v]
                if (s >> v) & 1:
                    adj[v] |= np.uint32(1) << np.uint32(n)
            adj[n] = np.uint32(s)
            out[k] = canonical_code(adj, n + 1)
            k += 1
    return out


@njit(cache=True)
def vertex_children_limited(parents, n, max_subset, max_degree):
    """Like vertex_children but with |subset| <= max_subset and every degree
    at most max_degree afterwards."""
    m = parents.shape[0]
    adj = np.empty(n + 1, dtype=np.uint32)
    deg = np.empty(n, dtype=np.int64)
    total = 0
    # first pass counts children so the output is allocated once
    for i in range(m):
        for v in range(n):
            c = 0
            x = parents[i, v]
            while x:
                c += x & 1
                x >>= 1
            deg[v] = c
        for s in range(1, 1 << n):
            bits = 0
            ok = True
            for v in range(n):
                if (s >> v) & 1:
                    bits += 1
                    if deg[v] + 1 > max_degree:
                        ok = False
            if ok and bits <= max_subset:
                total += 1
    out = np.empty((total, n + 1), dtype=np.uint32)
    k = 0
    for i in range(m):
        for v in range(n):
            c = 0
            x = parents[i, v]
            while x:
                c += x & 1
                x >>= 1
            deg[v] = c
        for s in range(1, 1 << n):
            bits = 0
            ok = True
            for v in range(n):
                if (s >> v) & 1:
                    bits += 1
                    if deg[v] + 1 > max_degree:
                        ok = False
            if not ok or bits > max_subset:
                continue
            for v in range(n):
                adj[v] = parents[i, v]
                if (s >> v) & 1:
                    adj[v] |= np.uint32(1) << np.uint32(n)
            adj[n] = np.uint32(s)
            out[k] = canonical_code(adj, n + 1)
            k += 1
    return out
