"""Matrix models of graphs and the spectrum-preserving transformations."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .graphs import (Graph, MixedGraph, OrientedGraph, ParameterError, SignedGraph)


class Symmetry(str, enum.Enum):
    SYMMETRIC = "Symmetric"
    HERMITIAN = "Hermitian"
    SKEW = "SkewSymmetric"
    GENERAL = "General"


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    entries: np.ndarray
    symmetry: Symmetry

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.entries) or not np.any(self.entries.imag)

    def real(self) -> np.ndarray:
        return np.real(self.entries) if self.is_real else self.entries

    def to_json(self) -> str:
        a = np.asarray(self.entries, dtype=complex)
        rows = [[[float(z.real), float(z.imag)] for z in row] for row in a]
        return json.dumps({"n": self.n, "symmetry": self.symmetry.value, "entries": rows})

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and self.symmetry == other.symmetry
                and np.array_equal(self.entries, other.entries))


def _degree_diag(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees, dtype=float)) if g.n else np.zeros((0, 0))


def _adj(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def adjacency(g: Graph) -> DenseMatrix:
    return DenseMatrix(_adj(g), Symmetry.SYMMETRIC)


def laplacian(g: Graph) -> DenseMatrix:
    return DenseMatrix(_degree_diag(g) - _adj(g), Symmetry.SYMMETRIC)


def signless_laplacian(g: Graph) -> DenseMatrix:
    return DenseMatrix(_degree_diag(g) + _adj(g), Symmetry.SYMMETRIC)


def a_alpha(g: Graph, alpha: float) -> DenseMatrix:
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return DenseMatrix(alpha * _degree_diag(g) + (1.0 - alpha) * _adj(g), Symmetry.SYMMETRIC)


def signed_adjacency(sg: SignedGraph) -> DenseMatrix:
    a = np.zeros((sg.n, sg.n))
    for (u, v), s in sg.sign.items():
        a[u, v] = a[v, u] = s
    return DenseMatrix(a, Symmetry.SYMMETRIC)


def hermitian_adjacency(mg: MixedGraph) -> DenseMatrix:
    h = np.zeros((mg.n, mg.n), dtype=complex)
    for u, v in mg.arcs:
        if (v, u) in mg.arcs:
            h[u, v] = 1.0
        else:
            h[u, v] = 1j
            h[v, u] = -1j
    return DenseMatrix(h, Symmetry.HERMITIAN)


def skew_adjacency(og: OrientedGraph) -> DenseMatrix:
    # entry (i, j) is +1 when the edge points at i, so i -> j gives -1
    s = np.zeros((og.n, og.n))
    for (i, j), head in og.orient.items():
        s[i, j] = 1.0 if head == i else -1.0
        s[j, i] = -s[i, j]
    return DenseMatrix(s, Symmetry.SKEW)


# ---------------------------------------------------------------------------
# transformations


def switch_signed(sg: SignedGraph, U) -> SignedGraph:
    U = set(U)
    sign = {e: (-s if (e[0] in U) != (e[1] in U) else s) for e, s in sg.sign.items()}
    return SignedGraph(sg.base, sign)


def switch_oriented(og: OrientedGraph, U) -> OrientedGraph:
    U = set(U)
    orient = {}
    for (a, b), h in og.orient.items():
        if (a in U) != (b in U):
            h = a if h == b else b
        orient[(a, b)] = h
    return OrientedGraph(og.base, orient)


def converse(mg: MixedGraph) -> MixedGraph:
    """Reverse every arc that is not part of a digon."""
    arcs = set()
    for u, v in mg.arcs:
        arcs.add((u, v) if (v, u) in mg.arcs else (v, u))
    return MixedGraph(mg.n, frozenset(arcs))


CLASS_LABELS = (1, -1, 1j, -1j)


@dataclass(frozen=True)
class FourWayPartition:
    """Vertex classes keyed by their label in {1, -1, i, -i}."""

    v_one: frozenset = frozenset()
    v_minus_one: frozenset = frozenset()
    v_i: frozenset = frozenset()
    v_minus_i: frozenset = frozenset()

    def __post_init__(self):
        sets = [frozenset(s) for s in (self.v_one, self.v_minus_one, self.v_i, self.v_minus_i)]
        for name, s in zip(("v_one", "v_minus_one", "v_i", "v_minus_i"), sets):
            object.__setattr__(self, name, s)
        total = sum(len(s) for s in sets)
        if len(frozenset().union(*sets)) != total:
            raise ParameterError("partition classes must be disjoint")

    @classmethod
    def from_labels(cls, labels) -> "FourWayPartition":
        groups: dict = {c: set() for c in CLASS_LABELS}
        for v, c in enumerate(labels):
            groups[complex(c) if not isinstance(c, int) else c].add(v)
        return cls(groups[1], groups[-1], groups[1j], groups[-1j])

    def label(self, v: int) -> complex:
        for c, s in zip(CLASS_LABELS, (self.v_one, self.v_minus_one, self.v_i, self.v_minus_i)):
            if v in s:
                return c
        raise ParameterError(f"vertex {v} is not covered by the partition")


class AdmissibilityError(ParameterError):
    def __init__(self, condition: str, detail: str):
        self.condition = condition
        super().__init__(f"inadmissible partition, condition ({condition}): {detail}")


def check_admissible(mg: MixedGraph, p: FourWayPartition) -> None:
    covered = p.v_one | p.v_minus_one | p.v_i | p.v_minus_i
    if covered != frozenset(range(mg.n)):
        raise ParameterError("partition must cover every vertex exactly once")
    for u, v in mg.digons:
        a, b = p.label(u), p.label(v)
        if a == -b:
            raise AdmissibilityError("a", f"digon {{{u}, {v}}} joins classes {a} and {b}")
    for u, v in mg.single_arcs:
        a, b = p.label(u), p.label(v)
        # types (1,i), (i,-1), (-1,-i), (-i,1): head label is i times tail label
        if b == 1j * a:
            raise AdmissibilityError("b", f"arc {u}->{v} of type ({a}, {b}) is not in a digon")


def four_way_switch(mg: MixedGraph, p: FourWayPartition) -> MixedGraph:
    check_admissible(mg, p)
    arcs: set = set()
    for u, v in mg.digons:
        a, b = p.label(u), p.label(v)
        if a == b:
            arcs |= {(u, v), (v, u)}
        elif b == 1j * a:
            # types (1,i), (-1,-i) and their inverses: single arc from the lower class
            arcs.add((u, v))
        elif a == 1j * b:
            arcs.add((v, u))
        else:  # pragma: no cover - excluded by admissibility
            raise AssertionError
    for u, v in mg.single_arcs:
        a, b = p.label(u), p.label(v)
        if a == b:
            arcs.add((u, v))
        elif a == -b:
            arcs.add((v, u))
        elif a == 1j * b:
            # types (i,1), (-1,i)... : the arc becomes a digon
            arcs |= {(u, v), (v, u)}
        else:  # pragma: no cover - excluded by admissibility
            raise AssertionError
    return MixedGraph(mg.n, frozenset(arcs))


def bipartite_double(og: OrientedGraph) -> OrientedGraph:
    """Vertex (i, k) becomes 2*i + k; (i,k) -> (j,l) iff i -> j and k != l."""
    arcs = []
    for u, v in og.arcs:
        arcs.append((2 * u, 2 * v + 1))
        arcs.append((2 * u + 1, 2 * v))
    return OrientedGraph.from_arcs(2 * og.n, arcs)
