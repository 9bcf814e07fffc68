"""Graph types, named families and structural recognizers.

Vertices are always the dense integers ``0..n-1``.  Every constructor below
documents its labeling so that downstream tests can address vertices directly.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping


class StructuralError(ValueError):
    """Input graph does not have the structure an operation needs."""


class ParameterError(ValueError):
    """Invalid parameters for a family or an operation."""


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise StructuralError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add(_edge(int(u), int(v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            e = _edge(u, v)
            if e in seen:
                raise StructuralError(f"multi-edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency_lists[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency_lists[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency_lists)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_bfs(self, 0)) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def remove_vertex(self, v: int) -> "Graph":
        """Delete ``v``; vertices above ``v`` shift down by one."""
        def f(x):
            return x - 1 if x > v else x
        return Graph(self.n - 1, frozenset((f(a), f(b)) for a, b in self.edges if v not in (a, b)))

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {_edge(u, v)})

    def relabel(self, perm: Mapping[int, int] | list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(_edge(perm[a], perm[b]) for a, b in self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class SignedGraph:
    base: Graph
    sign: Mapping = field(hash=False)

    def __post_init__(self):
        sign = {_edge(*e): int(s) for e, s in self.sign.items()}
        if set(sign) != set(self.base.edges):
            raise StructuralError("signature must be defined on exactly the edge set")
        if any(s not in (1, -1) for s in sign.values()):
            raise ParameterError("signs must be +1 or -1")
        object.__setattr__(self, "sign", sign)

    @classmethod
    def all_positive(cls, g: Graph) -> "SignedGraph":
        return cls(g, {e: 1 for e in g.edges})

    @classmethod
    def all_negative(cls, g: Graph) -> "SignedGraph":
        return cls(g, {e: -1 for e in g.edges})

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def negative_edges(self) -> frozenset:
        return frozenset(e for e, s in self.sign.items() if s < 0)


@dataclass(frozen=True)
class MixedGraph:
    """Digraph on ``0..n-1``; an arc pair (u, v), (v, u) is a digon."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        arcs = set()
        for u, v in self.arcs:
            if u == v:
                raise StructuralError(f"self-arc at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise StructuralError(f"arc {(u, v)} has an endpoint outside 0..{self.n - 1}")
            arcs.add((int(u), int(v)))
        object.__setattr__(self, "arcs", frozenset(arcs))

    @classmethod
    def from_graph(cls, g: Graph) -> "MixedGraph":
        """Every edge becomes a digon."""
        return cls(g.n, frozenset(a for u, v in g.edges for a in ((u, v), (v, u))))

    @cached_property
    def digons(self) -> frozenset:
        return frozenset(_edge(u, v) for u, v in self.arcs if (v, u) in self.arcs)

    @cached_property
    def single_arcs(self) -> frozenset:
        return frozenset((u, v) for u, v in self.arcs if (v, u) not in self.arcs)

    @cached_property
    def underlying(self) -> Graph:
        return Graph(self.n, frozenset(_edge(u, v) for u, v in self.arcs))

    def __repr__(self):
        return f"MixedGraph(n={self.n}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True)
class OrientedGraph:
    """Graph with every edge oriented; ``orient[{i, j}]`` is the vertex the edge points to."""

    base: Graph
    orient: Mapping = field(hash=False)

    def __post_init__(self):
        orient = {_edge(*e): int(h) for e, h in self.orient.items()}
        if set(orient) != set(self.base.edges):
            raise StructuralError("orientation must be defined on exactly the edge set")
        for e, h in orient.items():
            if h not in e:
                raise StructuralError(f"head {h} is not an endpoint of {e}")
        object.__setattr__(self, "orient", orient)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "OrientedGraph":
        arcs = list(arcs)
        g = Graph.from_edges(n, arcs)
        return cls(g, {_edge(u, v): v for u, v in arcs})

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def arcs(self) -> frozenset:
        return frozenset((e[0] if h == e[1] else e[1], h) for e, h in self.orient.items())

    def as_mixed(self) -> MixedGraph:
        return MixedGraph(self.n, self.arcs)


# ---------------------------------------------------------------------------
# families


class Family(str, enum.Enum):
    PATH = "Path"
    CYCLE = "Cycle"
    STAR = "Star"
    TSHAPE = "TShape"
    HSHAPE = "HShape"
    DOUBLE_SNAKE = "DoubleSnake"
    CATERPILLAR = "Caterpillar"
    DAGGER = "Dagger"
    DIRECTED_CYCLE = "DirectedCycle"
    CTILDE = "CTilde"
    CTILDE_PRIME = "CTildePrime"
    CTILDE_DOUBLE_PRIME = "CTildeDoublePrime"
    BOX = "BoxABCD"


_MIXED_FAMILIES = {Family.DIRECTED_CYCLE, Family.CTILDE, Family.CTILDE_PRIME,
                   Family.CTILDE_DOUBLE_PRIME, Family.BOX}


@dataclass(frozen=True)
class FamilySpec:
    name: Family
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "name", Family(self.name))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        _validate(self.name, self.params)

    @property
    def is_mixed(self) -> bool:
        return self.name in _MIXED_FAMILIES


def _need(cond: bool, msg: str):
    if not cond:
        raise ParameterError(msg)


def _validate(name: Family, p: tuple):
    arity = {Family.PATH: 1, Family.CYCLE: 1, Family.STAR: 1, Family.TSHAPE: 3,
             Family.HSHAPE: 3, Family.DOUBLE_SNAKE: 1, Family.DAGGER: 1,
             Family.DIRECTED_CYCLE: 1, Family.CTILDE: 1, Family.CTILDE_PRIME: 1,
             Family.CTILDE_DOUBLE_PRIME: 1, Family.BOX: 4}
    if name in arity:
        _need(len(p) == arity[name], f"{name.value} takes {arity[name]} parameter(s), got {len(p)}")
    if name is Family.PATH:
        _need(p[0] >= 1, "Path needs n >= 1")
    elif name is Family.CYCLE:
        _need(p[0] >= 3, "Cycle needs n >= 3")
    elif name is Family.STAR:
        _need(p[0] >= 1, "Star K_{1,k} needs k >= 1")
    elif name is Family.TSHAPE:
        a, b, c = p
        _need(c >= b >= a >= 1, "TShape needs c >= b >= a >= 1")
    elif name is Family.HSHAPE:
        a, b, c = p
        _need(c >= a >= 1 and b >= 1, "HShape needs c >= a >= 1 and b >= 1")
    elif name is Family.DOUBLE_SNAKE:
        _need(p[0] >= 6, "DoubleSnake needs n >= 6")
    elif name is Family.CATERPILLAR:
        _need(len(p) >= 1 and all(k >= 0 for k in p), "Caterpillar needs a non-empty list of pendant counts")
    elif name is Family.DAGGER:
        _need(p[0] >= 2, "Dagger needs a path of at least 2 vertices")
    elif name is Family.DIRECTED_CYCLE:
        _need(p[0] >= 3, "DirectedCycle needs n >= 3")
    elif name in (Family.CTILDE, Family.CTILDE_PRIME):
        _need(p[0] >= 3, f"{name.value} needs n >= 3")
    elif name is Family.CTILDE_DOUBLE_PRIME:
        _need(p[0] >= 3, "CTildeDoublePrime needs n >= 3")
    elif name is Family.BOX:
        _need(all(x >= 0 for x in p), "BoxABCD needs non-negative path lengths")


def build_family(spec: FamilySpec) -> Graph | MixedGraph:
    p = spec.params
    builders = {
        Family.PATH: path, Family.CYCLE: cycle, Family.STAR: star,
        Family.TSHAPE: t_shape, Family.HSHAPE: h_shape,
        Family.DOUBLE_SNAKE: double_snake, Family.DAGGER: dagger,
        Family.DIRECTED_CYCLE: directed_cycle, Family.CTILDE: c_tilde,
        Family.CTILDE_PRIME: c_tilde_prime, Family.CTILDE_DOUBLE_PRIME: c_tilde_double_prime,
        Family.BOX: box,
    }
    if spec.name is Family.CATERPILLAR:
        return caterpillar(p)
    return builders[spec.name](*p)


def path(n: int) -> Graph:
    """P_n labeled 0-1-...-(n-1)."""
    _need(n >= 1, "Path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n labeled cyclically 0..n-1."""
    _need(n >= 3, "Cycle needs n >= 3")
    return Graph(n, frozenset(_edge(i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star(k: int) -> Graph:
    """K_{1,k}: center 0, leaves 1..k."""
    _need(k >= 1, "Star K_{1,k} needs k >= 1")
    return Graph(k + 1, frozenset((0, i) for i in range(1, k + 1)))


def _attach_path(edges: set, start: int, at: int, length: int) -> int:
    """Hang a path of ``length`` new vertices numbered from ``start`` off ``at``."""
    prev = at
    for i in range(length):
        edges.add(_edge(prev, start + i))
        prev = start + i
    return start + length


def spider(*legs: int) -> Graph:
    """Center 0 with pendant paths of the given lengths, numbered leg by leg."""
    edges: set = set()
    nxt = 1
    for L in legs:
        nxt = _attach_path(edges, nxt, 0, L)
    return Graph(nxt, frozenset(edges))


def t_shape(a: int, b: int, c: int) -> Graph:
    """T_{a,b,c}; legs are sorted ascending and laid out as ``spider``."""
    a, b, c = sorted((a, b, c))
    _need(a >= 1, "TShape legs must be >= 1")
    return spider(a, b, c)


def h_shape(a: int, b: int, c: int) -> Graph:
    """Q_{a,b,c}: bar 0..b of b edges; vertex 0 carries a pendant vertex and a
    leg of a vertices, vertex b carries a pendant vertex and a leg of c vertices.

    Labels: bar 0..b, then pendant at 0, leg a, pendant at b, leg c.
    """
    _need(a >= 1 and c >= 1 and b >= 1, "HShape needs a, b, c >= 1")
    edges = {(i, i + 1) for i in range(b)}
    nxt = b + 1
    nxt = _attach_path(edges, nxt, 0, 1)
    nxt = _attach_path(edges, nxt, 0, a)
    nxt = _attach_path(edges, nxt, b, 1)
    nxt = _attach_path(edges, nxt, b, c)
    return Graph(nxt, frozenset(edges))


def double_snake(n: int) -> Graph:
    """W_n: spine 0..n-5 with pendants n-4, n-3 at 0 and n-2, n-1 at n-5."""
    _need(n >= 6, "DoubleSnake needs n >= 6")
    k = n - 5
    edges = {(i, i + 1) for i in range(k)}
    edges |= {(0, n - 4), (0, n - 3), (k, n - 2), (k, n - 1)}
    return Graph(n, frozenset(edges))


def caterpillar(pendants) -> Graph:
    """Spine 0..m-1; pendants numbered from m, spine vertex by spine vertex."""
    pendants = list(pendants)
    _need(len(pendants) >= 1 and all(k >= 0 for k in pendants), "bad caterpillar pendant counts")
    m = len(pendants)
    edges = {(i, i + 1) for i in range(m - 1)}
    nxt = m
    for i, k in enumerate(pendants):
        for _ in range(k):
            edges.add((i, nxt))
            nxt += 1
    return Graph(nxt, frozenset(edges))


def dagger(k: int) -> Graph:
    """Path 0..k-1 whose end vertex 0 carries three pendant vertices k, k+1, k+2."""
    _need(k >= 2, "Dagger needs a path of at least 2 vertices")
    edges = {(i, i + 1) for i in range(k - 1)} | {(0, k), (0, k + 1), (0, k + 2)}
    return Graph(k + 3, frozenset(edges))


def directed_cycle(n: int) -> MixedGraph:
    """D_n with arcs i -> i+1 (mod n)."""
    _need(n >= 3, "DirectedCycle needs n >= 3")
    return MixedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def c_tilde(n: int) -> MixedGraph:
    """D_n with the arc 0 -> 1 reversed."""
    arcs = set(directed_cycle(n).arcs)
    arcs.remove((0, 1))
    arcs.add((1, 0))
    return MixedGraph(n, frozenset(arcs))


def c_tilde_prime(n: int) -> MixedGraph:
    """D_n with the arc 0 -> 1 replaced by a digon."""
    arcs = set(directed_cycle(n).arcs) | {(1, 0)}
    return MixedGraph(n, frozenset(arcs))


def c_tilde_double_prime(n: int) -> MixedGraph:
    """D_n with 0 -> 1 made a digon and the next arc 1 -> 2 reversed."""
    arcs = set(directed_cycle(n).arcs) | {(1, 0)}
    arcs.remove((1, 2))
    arcs.add((2, 1))
    return MixedGraph(n, frozenset(arcs))


def box(a: int, b: int, c: int, d: int) -> MixedGraph:
    """Negative quadrangle 0,1,2,3 (digons 0=1, 2=3, arcs 1->2, 3->0) with
    directed paths of a, b, c, d arcs leaving vertices 0, 1, 2, 3."""
    _need(min(a, b, c, d) >= 0, "BoxABCD needs non-negative path lengths")
    arcs = {(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (3, 0)}
    nxt = 4
    for root, L in zip(range(4), (a, b, c, d)):
        prev = root
        for _ in range(L):
            arcs.add((prev, nxt))
            prev = nxt
            nxt += 1
    return MixedGraph(nxt, frozenset(arcs))


# ---------------------------------------------------------------------------
# structure


def _bfs(g: Graph, src: int) -> dict[int, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _require_connected(g: Graph):
    if g.n == 0 or not g.is_connected():
        raise StructuralError("graph must be connected and non-empty")


def diameter(g: Graph) -> int:
    _require_connected(g)
    return max(max(_bfs(g, v).values()) for v in range(g.n))


def join_graphs(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Disjoint union (g2 shifted by g1.n) plus the bridge u -- v."""
    if not (0 <= u < g1.n and 0 <= v < g2.n):
        raise ParameterError("join vertex out of range")
    off = g1.n
    edges = set(g1.edges) | {(a + off, b + off) for a, b in g2.edges} | {(u, v + off)}
    return Graph(g1.n + g2.n, frozenset(edges))


class Compound(str, enum.Enum):
    ONE_PATH = "OnePath"
    TWO_PATHS = "TwoPaths"


def compound(g: Graph, u: int, kind: Compound | str, n: int) -> Graph:
    """G_u(P_n) or G_u(P_n, P_n); new path vertices follow g's labels,
    each path numbered outward from u."""
    kind = Compound(kind)
    _need(n >= 1, "compound needs n >= 1")
    if not 0 <= u < g.n:
        raise ParameterError("compound vertex out of range")
    edges = set(g.edges)
    nxt = _attach_path(edges, g.n, u, n)
    if kind is Compound.TWO_PATHS:
        nxt = _attach_path(edges, nxt, u, n)
    return Graph(nxt, frozenset(edges))


def xy_bridge(x_graph: Graph, x: int, y_graph: Graph, y: int, n: int) -> Graph:
    """XY(x, y; n): x and y joined by a path with n internal vertices.

    Labels: X first, then the internal path from x's side, then Y.
    """
    _need(n >= 0, "xy_bridge needs n >= 0")
    if not (0 <= x < x_graph.n and 0 <= y < y_graph.n):
        raise ParameterError("bridge vertex out of range")
    edges = set(x_graph.edges)
    end = _attach_path(edges, x_graph.n, x, n)
    last = end - 1 if n > 0 else x
    off = end
    edges |= {(a + off, b + off) for a, b in y_graph.edges}
    edges.add(_edge(last, y + off))
    return Graph(off + y_graph.n, frozenset(edges))


@dataclass(frozen=True)
class ShapeReport:
    path: bool = False
    cycle: bool = False
    star: bool = False
    t_shape: tuple | None = None
    h_shape: tuple | None = None
    double_snake: bool = False
    open_quipu: bool = False
    closed_quipu: bool = False
    dagger: bool = False
    caterpillar: bool = False

    def as_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def _arm_length(g: Graph, hub: int, first: int) -> int | None:
    """Walk from hub through first along degree-2 vertices; length if it ends at a leaf."""
    prev, cur, length = hub, first, 1
    while g.degree(cur) == 2:
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
        length += 1
    return length if g.degree(cur) == 1 else None


def _vertices_on_one_path(tree: Graph, targets: list[int]) -> bool:
    """In a tree, do all ``targets`` lie on a single path?"""
    if len(targets) <= 2:
        return True
    # the two targets farthest apart span the candidate path
    d0 = _bfs(tree, targets[0])
    a = max(targets, key=lambda t: d0[t])
    da = _bfs(tree, a)
    b = max(targets, key=lambda t: da[t])
    db = _bfs(tree, b)
    return all(da[t] + db[t] == da[b] for t in targets)


def _cycle_vertices(g: Graph) -> set[int]:
    """Vertices of the unique cycle of a connected unicyclic graph (leaf peeling)."""
    deg = list(g.degrees)
    alive = set(range(g.n))
    q = deque(v for v in alive if deg[v] <= 1)
    while q:
        v = q.popleft()
        if v not in alive:
            continue
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    q.append(w)
    return alive


def recognize_shape(g: Graph) -> ShapeReport:
    _require_connected(g)
    deg = g.degrees
    n, m = g.n, g.m
    tree = m == n - 1
    maxd = max(deg, default=0)
    hubs = [v for v in range(n) if deg[v] >= 3]
    r: dict = {}

    r["path"] = tree and maxd <= 2
    r["cycle"] = m == n and n >= 3 and all(d == 2 for d in deg)
    r["star"] = tree and n >= 2 and maxd == n - 1

    if tree and len(hubs) == 1 and deg[hubs[0]] == 3:
        legs = [_arm_length(g, hubs[0], w) for w in g.neighbors(hubs[0])]
        r["t_shape"] = tuple(sorted(legs))

    if tree and len(hubs) == 2 and maxd == 3:
        u, v = hubs
        arms_u = [(w, _arm_length(g, u, w)) for w in g.neighbors(u)]
        arms_v = [(w, _arm_length(g, v, w)) for w in g.neighbors(v)]
        legs_u = sorted(L for _, L in arms_u if L is not None)
        legs_v = sorted(L for _, L in arms_v if L is not None)
        if len(legs_u) == 2 and len(legs_v) == 2 and legs_u[0] == 1 and legs_v[0] == 1:
            bar = _bfs(g, u)[v]
            a, c = sorted((legs_u[1], legs_v[1]))
            r["h_shape"] = (a, bar, c)
            r["double_snake"] = a == 1 and c == 1

    if tree and maxd <= 3:
        r["open_quipu"] = _vertices_on_one_path(g, hubs)
    if m == n and maxd <= 3:
        cyc = _cycle_vertices(g)
        r["closed_quipu"] = all(h in cyc for h in hubs)
    if tree and len(hubs) == 1 and deg[hubs[0]] == 4:
        h = hubs[0]
        arms = sorted(_arm_length(g, h, w) or 0 for w in g.neighbors(h))
        r["dagger"] = arms[:3] == [1, 1, 1] and arms[3] >= 1
    if tree:
        spine = [v for v in range(n) if deg[v] >= 2]
        if len(spine) <= 1:
            r["caterpillar"] = True
        else:
            sub_edges = [(a, b) for a, b in g.edges if deg[a] >= 2 and deg[b] >= 2]
            sdeg: dict[int, int] = {}
            for a, b in sub_edges:
                sdeg[a] = sdeg.get(a, 0) + 1
                sdeg[b] = sdeg.get(b, 0) + 1
            r["caterpillar"] = max(sdeg.values(), default=0) <= 2
    return ShapeReport(**r)
