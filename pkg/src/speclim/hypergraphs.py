"""Uniform hypergraphs and the spectral radius of their adjacency tensor."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .formats import FormatError
from .graphs import Graph, ParameterError, StructuralError
from .limits import LimitReport

RESIDUAL_TOL = 1e-9
MAX_ITER = 100_000


@dataclass(frozen=True)
class UniformHypergraph:
    n: int
    r: int
    edges: tuple

    def __post_init__(self):
        if self.r < 2:
            raise StructuralError("uniformity must be >= 2")
        if not self.edges:
            raise StructuralError("a hypergraph needs at least one edge")
        norm = []
        for e in self.edges:
            e = tuple(sorted(int(v) for v in e))
            if len(e) != self.r or len(set(e)) != self.r:
                raise StructuralError(f"edge {e} does not have {self.r} distinct vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise StructuralError(f"edge {e} has a vertex outside 0..{self.n - 1}")
            norm.append(e)
        if len(set(norm)) != len(norm):
            raise StructuralError("repeated edge")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_array(self) -> np.ndarray:
        return np.asarray(self.edges, dtype=np.int64)

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array().ravel(), minlength=self.n)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            for v in e[1:]:
                a, b = find(e[0]), find(v)
                if a != b:
                    parent[a] = b
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced(self, vertices) -> "UniformHypergraph":
        index = {v: i for i, v in enumerate(sorted(vertices))}
        edges = [tuple(index[v] for v in e) for e in self.edges if all(v in index for v in e)]
        return UniformHypergraph(len(index), self.r, tuple(edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "UniformHypergraph":
        return cls(g.n, 2, tuple(g.edges))


# ---------------------------------------------------------------------------
# text format: "r n m" then one edge per line


def parse_hypergraph(text: str) -> UniformHypergraph:
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise FormatError("empty input", 0)
    lineno, head = lines[0]
    try:
        r, n, m = (int(t) for t in head.split())
    except ValueError:
        raise FormatError("header must be 'r n m'", lineno) from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}", lineno)
    edges = []
    for lineno, ln in body:
        try:
            e = tuple(int(t) for t in ln.split())
        except ValueError:
            raise FormatError("edge vertices must be integers", lineno) from None
        if len(e) != r:
            raise FormatError(f"edge has {len(e)} vertices, expected {r}", lineno)
        edges.append(e)
    try:
        return UniformHypergraph(n, r, tuple(edges))
    except StructuralError as exc:
        raise FormatError(str(exc), 0) from None


def read_hypergraph(path: str | Path) -> UniformHypergraph:
    return parse_hypergraph(Path(path).read_text())


def format_hypergraph(h: UniformHypergraph) -> str:
    out = [f"{h.r} {h.n} {h.m}"]
    out += [" ".join(str(v) for v in e) for e in h.edges]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# tensor operations


def _check_dim(h: UniformHypergraph, x: np.ndarray):
    if x.shape != (h.n,):
        raise ParameterError(f"vector has shape {x.shape}, expected ({h.n},)")


def f_H(h: UniformHypergraph, x) -> float:
    """r times the sum over edges of the product of the edge's coordinates."""
    x = np.asarray(x, dtype=float)
    _check_dim(h, x)
    return float(h.r * np.prod(x[h.edge_array()], axis=1).sum())


def tensor_apply(h: UniformHypergraph, x) -> np.ndarray:
    """y_j = sum over edges e containing j of the product of x over e minus j."""
    x = np.asarray(x, dtype=float)
    _check_dim(h, x)
    e = h.edge_array()
    vals = x[e]
    y = np.zeros(h.n)
    for p in range(h.r):
        others = np.prod(np.delete(vals, p, axis=1), axis=1)
        y += np.bincount(e[:, p], weights=others, minlength=h.n)
    return y


def _rnorm(x: np.ndarray, r: int) -> np.ndarray:
    return x / np.sum(x ** r) ** (1.0 / r)


@dataclass(frozen=True)
class TensorIterate:
    x: np.ndarray
    value: float
    residual: float
    iterations: int
    converged: bool
    history: tuple = field(default=(), repr=False)


def power_iteration(h: UniformHypergraph, x0=None, tol: float = RESIDUAL_TOL,
                    max_iter: int = MAX_ITER) -> TensorIterate:
    """Shifted power iteration x <- (A x^{r-1} + x^{r-1})^{1/(r-1)} on a connected H.

    The shift makes the iteration converge on every connected hypergraph (it
    removes the periodicity of bipartite-like structures) without moving the
    eigenvector.
    """
    r = h.r
    x = np.ones(h.n) if x0 is None else np.asarray(x0, dtype=float).copy()
    _check_dim(h, x)
    if np.any(x <= 0):
        raise ParameterError("start vector must be positive")
    x = _rnorm(x, r)
    lam, res = 0.0, np.inf
    for it in range(1, max_iter + 1):
        y = tensor_apply(h, x)
        xp = x ** (r - 1)
        lam = float(x @ y)
        res = float(np.max(np.abs(y - lam * xp)))
        if res < tol:
            return TensorIterate(x, lam, res, it, True)
        x = _rnorm((y + xp) ** (1.0 / (r - 1)), r)
    return TensorIterate(x, lam, res, max_iter, False)


def tensor_radius(h: UniformHypergraph, seed: int = 0, checks: int = 100) -> LimitReport:
    """Spectral radius of the adjacency tensor; componentwise maximum if H is disconnected."""
    comps = h.components()
    best: TensorIterate | None = None
    best_comp = None
    deg = h.degrees()
    for comp in comps:
        if len(comp) == 1 and deg[comp[0]] == 0:
            continue
        it = power_iteration(h.induced(comp))
        if best is None or it.value > best.value:
            best, best_comp = it, comp
    rng = np.random.default_rng(seed)
    ok = True
    for _ in range(checks):
        u = np.abs(rng.standard_normal(h.n)) + 1e-12
        u = _rnorm(u, h.r)
        if f_H(h, u) > best.value + 1e-9:
            ok = False
            break
    x = np.zeros(h.n)
    x[best_comp] = best.x
    return LimitReport(
        value=best.value,
        defining_equation="A x^(r-1) = lambda x^[r-1], ||x||_r = 1",
        bracket=(best.value - best.residual, best.value + best.residual),
        iterations=best.iterations,
        residual=best.residual,
        extra={"converged": best.converged, "components": len(comps),
               "random_check_passed": ok, "eigenvector": x.tolist()},
    )


# ---------------------------------------------------------------------------
# extension and reduction


def extend(h: UniformHypergraph) -> UniformHypergraph:
    """Add one fresh vertex to every edge."""
    edges = tuple(e + (h.n + i,) for i, e in enumerate(h.edges))
    return UniformHypergraph(h.n + h.m, h.r + 1, edges)


def reduce(h: UniformHypergraph) -> UniformHypergraph:
    """Remove one degree-1 vertex (the highest-numbered) from every edge."""
    if h.r < 3:
        raise StructuralError("cannot reduce below uniformity 2")
    deg = h.degrees()
    dropped = set()
    edges = []
    for e in h.edges:
        leaves = [v for v in e if deg[v] == 1]
        if not leaves:
            raise StructuralError(f"edge {e} has no degree-1 vertex; hypergraph is not reducible")
        drop = max(leaves)
        dropped.add(drop)
        edges.append(tuple(v for v in e if v != drop))
    keep = [v for v in range(h.n) if v not in dropped]
    index = {v: i for i, v in enumerate(keep)}
    return UniformHypergraph(len(keep), h.r - 1, tuple(tuple(index[v] for v in e) for e in edges))


# ---------------------------------------------------------------------------
# families


class _Builder:
    def __init__(self, r: int):
        self.r = r
        self.n = 0
        self.edges: list[tuple] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, start: int) -> tuple:
        """New edge through ``start`` and r - 1 fresh vertices."""
        e = (start,) + tuple(self.vertex() for _ in range(self.r - 1))
        self.edges.append(e)
        return e

    def hyperpath(self, start: int, length: int) -> list[tuple]:
        out = []
        cur = start
        for _ in range(length):
            e = self.edge(cur)
            out.append(e)
            cur = e[-1]
        return out

    def build(self) -> UniformHypergraph:
        return UniformHypergraph(self.n, self.r, tuple(self.edges))


def hyperpath(m: int, r: int = 3) -> UniformHypergraph:
    if m < 1:
        raise ParameterError("hyperpath needs m >= 1 edges")
    b = _Builder(r)
    b.hyperpath(b.vertex(), m)
    return b.build()


def hypercycle(m: int, r: int = 3) -> UniformHypergraph:
    """m edges in cyclic order, consecutive edges sharing one vertex."""
    if m < 3:
        raise ParameterError("hypercycle needs m >= 3 edges")
    b = _Builder(r)
    first = b.vertex()
    cur = first
    for i in range(m):
        if i == m - 1:
            e = (cur,) + tuple(b.vertex() for _ in range(r - 2)) + (first,)
            b.edges.append(e)
        else:
            e = b.edge(cur)
            cur = e[-1]
    return b.build()


def e_family(i: int, j: int, k: int) -> UniformHypergraph:
    """Three 3-uniform hyperpaths of lengths i, j, k attached at one vertex."""
    if min(i, j, k) < 1:
        raise ParameterError("E family lengths must be >= 1")
    b = _Builder(3)
    c = b.vertex()
    for length in (i, j, k):
        b.hyperpath(c, length)
    return b.build()


def f_family(i: int, j: int, k: int) -> UniformHypergraph:
    """A 3-edge with hyperpaths of lengths i, j, k attached at its three vertices."""
    if min(i, j, k) < 0:
        raise ParameterError("F family lengths must be >= 0")
    b = _Builder(3)
    core = (b.vertex(), b.vertex(), b.vertex())
    b.edges.append(core)
    for v, length in zip(core, (i, j, k)):
        b.hyperpath(v, length)
    return b.build()


def g_family(i: int, j: int, k: int, l: int, t: int) -> UniformHypergraph:
    """Hyperpath of length k + 2 whose two terminal edges each carry two hyperpaths
    (lengths i, j at one end, l, t at the other) on their degree-1 vertices."""
    if min(i, j, l, t) < 0 or k < 0:
        raise ParameterError("G family lengths must be >= 0")
    b = _Builder(3)
    spine = b.hyperpath(b.vertex(), k + 2)
    head, tail = spine[0], spine[-1]
    b.hyperpath(head[0], i)
    b.hyperpath(head[1], j)
    b.hyperpath(tail[1], l)
    b.hyperpath(tail[2], t)
    return b.build()


_HYPER_FAMILIES = {
    "hyperpath": (hyperpath, (1, 2)),
    "hypercycle": (hypercycle, (1, 2)),
    "E": (e_family, (3, 3)),
    "F": (f_family, (3, 3)),
    "G": (g_family, (5, 5)),
}


def build_hyperfamily(name: str, params) -> UniformHypergraph:
    """Families by name: hyperpath(m[, r]), hypercycle(m[, r]), E(i,j,k), F(i,j,k), G(i,j,k,l,t)."""
    if name not in _HYPER_FAMILIES:
        raise ParameterError(f"unknown hypergraph family {name!r}; known: {sorted(_HYPER_FAMILIES)}")
    fn, (lo, hi) = _HYPER_FAMILIES[name]
    params = tuple(int(p) for p in params)
    if not lo <= len(params) <= hi:
        raise ParameterError(f"{name} takes between {lo} and {hi} integer parameters")
    return fn(*params)


__all__ = ["UniformHypergraph", "TensorIterate", "parse_hypergraph", "read_hypergraph",
           "format_hypergraph", "f_H", "tensor_apply", "power_iteration", "tensor_radius",
           "extend", "reduce", "hyperpath", "hypercycle", "e_family",
           "f_family", "g_family", "build_hyperfamily"]
