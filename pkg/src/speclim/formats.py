"""Plain-text graph files.

One header line ``n <count>`` followed by one edge per line.  The edge syntax
decides the flavor of the whole file:

    u v        undirected edge
    u v +      signed edge (also ``-``)
    u > v      arc of a mixed graph
    u = v      digon of a mixed graph
    u -> v     oriented edge

Blank lines and anything after ``#`` are ignored.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graphs import Graph, MixedGraph, OrientedGraph, SignedGraph, _edge


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_PATTERNS = {
    "oriented": re.compile(r"^(\d+)\s*->\s*(\d+)$"),
    "mixed": re.compile(r"^(\d+)\s*([>=])\s*(\d+)$"),
    "signed": re.compile(r"^(\d+)\s+(\d+)\s+([+-])$"),
    "plain": re.compile(r"^(\d+)\s+(\d+)$"),
}


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _classify(line: str, no: int) -> tuple[str, re.Match]:
    for kind, pat in _PATTERNS.items():
        m = pat.match(line)
        if m:
            return kind, m
    raise FormatError(f"malformed edge line {line!r}", no)


def parse_graph(text: str) -> Graph | SignedGraph | MixedGraph | OrientedGraph:
    """Parse a graph file; the flavor is detected from the edge lines."""
    it = _lines(text)
    try:
        no, header = next(it)
    except StopIteration:
        raise FormatError("empty input") from None
    m = re.match(r"^n\s+(\d+)$", header)
    if not m:
        raise FormatError(f"expected header 'n <count>', got {header!r}", no)
    n = int(m.group(1))

    kind = None
    items = []
    for no, line in it:
        k, mt = _classify(line, no)
        if kind is None:
            kind = k
        elif k != kind:
            raise FormatError(f"edge line {line!r} mixes {k} syntax into a {kind} file", no)
        items.append((no, mt))

    def vertex(s: str, no: int) -> int:
        v = int(s)
        if v >= n:
            raise FormatError(f"vertex {v} out of range 0..{n - 1}", no)
        return v

    def check_pair(u, v, seen, no):
        if u == v:
            raise FormatError(f"loop at vertex {u}", no)
        e = _edge(u, v)
        if e in seen:
            raise FormatError(f"duplicate edge {e}", no)
        seen.add(e)
        return e

    seen: set = set()
    if kind in (None, "plain"):
        edges = [check_pair(vertex(mt.group(1), no), vertex(mt.group(2), no), seen, no) for no, mt in items]
        return Graph(n, frozenset(edges))
    if kind == "signed":
        sign = {}
        for no, mt in items:
            e = check_pair(vertex(mt.group(1), no), vertex(mt.group(2), no), seen, no)
            sign[e] = 1 if mt.group(3) == "+" else -1
        return SignedGraph(Graph(n, frozenset(sign)), sign)
    if kind == "oriented":
        orient = {}
        for no, mt in items:
            u, v = vertex(mt.group(1), no), vertex(mt.group(2), no)
            orient[check_pair(u, v, seen, no)] = v
        return OrientedGraph(Graph(n, frozenset(orient)), orient)
    arcs = set()
    for no, mt in items:
        u, op, v = vertex(mt.group(1), no), mt.group(2), vertex(mt.group(3), no)
        if u == v:
            raise FormatError(f"self-arc at {u}", no)
        new = {(u, v), (v, u)} if op == "=" else {(u, v)}
        if new & arcs:
            raise FormatError(f"arc between {u} and {v} given twice", no)
        arcs |= new
    return MixedGraph(n, frozenset(arcs))


def read_graph(path: str | Path):
    return parse_graph(Path(path).read_text())


def format_graph(g) -> str:
    out = [f"n {g.n}"]
    if isinstance(g, SignedGraph):
        out += [f"{u} {v} {'+' if s > 0 else '-'}" for (u, v), s in sorted(g.sign.items())]
    elif isinstance(g, OrientedGraph):
        out += [f"{u} -> {v}" for u, v in sorted(g.arcs)]
    elif isinstance(g, MixedGraph):
        out += [f"{u} = {v}" for u, v in sorted(g.digons)]
        out += [f"{u} > {v}" for u, v in sorted(g.single_arcs)]
    else:
        out += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"
