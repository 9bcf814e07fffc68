from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from speclim.graphs import (Compound, Family, FamilySpec, Graph, MixedGraph, OrientedGraph,
                            ParameterError, SignedGraph, StructuralError, box, build_family,
                            c_tilde, c_tilde_double_prime, c_tilde_prime, caterpillar, complete,
                            compound, cycle, dagger, diameter, directed_cycle, double_snake,
                            h_shape, join_graphs, path, recognize_shape, star, t_shape, xy_bridge)
from speclim.spectra import spectral_radius

from oracles import nx_graph


def iso(g, h) -> bool:
    return nx.is_isomorphic(nx_graph(g), nx_graph(h))


# --- types ----------------------------------------------------------------


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(StructuralError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(StructuralError):
        Graph(2, frozenset({(0, 2)}))


def test_graph_from_edges_rejects_multi_edges():
    with pytest.raises(StructuralError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_signed_graph_needs_sign_on_every_edge():
    g = path(3)
    with pytest.raises(StructuralError):
        SignedGraph(g, {(0, 1): 1})
    with pytest.raises(ParameterError):
        SignedGraph(g, {(0, 1): 1, (1, 2): 2})


def test_mixed_graph_digons_and_underlying():
    mg = MixedGraph(3, frozenset({(0, 1), (1, 0), (1, 2)}))
    assert mg.digons == {(0, 1)}
    assert mg.single_arcs == {(1, 2)}
    assert mg.underlying == path(3)
    with pytest.raises(StructuralError):
        MixedGraph(2, frozenset({(0, 0)}))


def test_oriented_graph_has_no_digons():
    og = OrientedGraph.from_arcs(3, [(0, 1), (2, 1)])
    assert og.as_mixed().digons == frozenset()
    with pytest.raises(StructuralError):
        OrientedGraph(path(2), {(0, 1): 2})


# --- families -------------------------------------------------------------


def test_path_1_is_a_single_vertex():
    g = build_family(FamilySpec("Path", (1,)))
    assert g.n == 1 and g.m == 0


def test_tshape_111_is_k13():
    assert iso(build_family(FamilySpec("TShape", (1, 1, 1))), star(3))


def test_double_snake_6():
    g = double_snake(6)
    assert g.n == 6 and g.is_tree()
    assert sorted(g.degrees) == [1, 1, 1, 1, 3, 3]
    assert spectral_radius(g) == pytest.approx(2.0, abs=1e-12)


def test_double_snake_shape_for_all_sizes():
    for n in range(6, 15):
        g = double_snake(n)
        assert g.n == n and g.m == n - 1 and g.is_tree() and g.max_degree == 3
        hubs = [v for v in range(n) if g.degree(v) == 3]
        assert len(hubs) == 2
        for h in hubs:
            assert sum(g.degree(w) == 1 for w in g.neighbors(h)) == 2


@pytest.mark.parametrize("spec", [("TShape", (2, 1, 3)), ("HShape", (3, 1, 2)),
                                  ("DoubleSnake", (5,)), ("Cycle", (2,)), ("Path", (0,)),
                                  ("BoxABCD", (1, -1, 0, 0)), ("Dagger", (1,))])
def test_invalid_params_raise(spec):
    with pytest.raises(ParameterError):
        FamilySpec(*spec)


def test_unknown_family_name_raises():
    with pytest.raises(ValueError):
        FamilySpec("Nope", (1,))


def test_family_constructors_match_networkx():
    assert nx.is_isomorphic(nx_graph(path(6)), nx.path_graph(6))
    assert nx.is_isomorphic(nx_graph(cycle(7)), nx.cycle_graph(7))
    assert nx.is_isomorphic(nx_graph(complete(5)), nx.complete_graph(5))
    assert nx.is_isomorphic(nx_graph(star(4)), nx.star_graph(4))


def test_mixed_families_return_mixed_graphs():
    for f in ("DirectedCycle", "CTilde", "CTildePrime", "CTildeDoublePrime"):
        g = build_family(FamilySpec(f, (5,)))
        assert isinstance(g, MixedGraph) and g.underlying == cycle(5)
    assert isinstance(build_family(FamilySpec("BoxABCD", (1, 0, 2, 0))), MixedGraph)


def test_mixed_cycle_arc_patterns():
    assert directed_cycle(4).digons == frozenset() and len(directed_cycle(4).arcs) == 4
    assert len(c_tilde(5).digons) == 0 and (1, 0) in c_tilde(5).arcs
    assert len(c_tilde_prime(5).digons) == 1
    ctt = c_tilde_double_prime(5)
    assert len(ctt.digons) == 1 and len(ctt.single_arcs) == 4


def test_box_vertex_count():
    g = box(3, 1, 2, 0)
    assert g.n == 4 + 6 and g.underlying.m == 4 + 6
    assert len(g.digons) == 2


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_tshape_roundtrip(a, b, c):
    a, b, c = sorted((a, b, c))
    g = build_family(FamilySpec("TShape", (a, b, c)))
    assert recognize_shape(g).t_shape == (a, b, c)
    assert g.n == a + b + c + 1


@given(st.integers(1, 30))
def test_path_and_cycle_edge_counts(n):
    assert path(n).m == n - 1
    if n >= 3:
        assert cycle(n).m == n


# --- shapes ---------------------------------------------------------------


def test_recognize_p7():
    r = recognize_shape(path(7))
    assert r.path and r.open_quipu and r.caterpillar


def test_recognize_t222():
    r = recognize_shape(t_shape(2, 2, 2))
    assert r.t_shape == (2, 2, 2) and r.open_quipu


def test_recognize_cycle_with_pendant_path_is_closed_quipu():
    g = Graph(7, cycle(5).edges | {(0, 5), (5, 6)})
    r = recognize_shape(g)
    assert r.closed_quipu and not r.open_quipu and not r.cycle


def test_recognize_hshape_params():
    assert recognize_shape(h_shape(2, 4, 3)).h_shape == (2, 4, 3)
    assert recognize_shape(h_shape(3, 4, 2)).h_shape == (2, 4, 3)


def test_recognize_dagger_and_flags_independent():
    r = recognize_shape(dagger(4))
    assert r.dagger and not r.open_quipu  # degree-4 hub


def test_recognize_star_and_caterpillar():
    assert recognize_shape(star(5)).star
    assert recognize_shape(caterpillar((2, 0, 3))).caterpillar
    assert not recognize_shape(t_shape(2, 2, 2)).caterpillar


def test_recognize_requires_connected():
    with pytest.raises(StructuralError):
        recognize_shape(Graph(3, frozenset({(0, 1)})))


# --- diameter, joins, compounds -------------------------------------------


def test_diameter_examples():
    assert diameter(path(9)) == 8
    assert diameter(cycle(6)) == 3
    assert diameter(star(4)) == 2
    with pytest.raises(StructuralError):
        diameter(Graph(2, frozenset()))


@given(st.integers(2, 12), st.integers(0, 3))
def test_diameter_matches_networkx(n, extra):
    g = caterpillar(tuple([extra] * n))
    assert diameter(g) == nx.diameter(nx_graph(g))


def test_join_examples():
    assert iso(join_graphs(path(1), 0, path(1), 0), path(2))
    assert iso(join_graphs(path(2), 1, path(2), 0), path(4))
    g = join_graphs(star(3), 0, path(4), 0)
    assert g.n == 8 and g.m == 3 + 3 + 1
    assert iso(g, compound(star(3), 0, Compound.ONE_PATH, 4))


def test_compound_examples():
    assert iso(compound(path(2), 1, "OnePath", 3), path(5))
    assert iso(compound(star(3), 0, "OnePath", 1), star(4))
    g = compound(path(3), 1, "TwoPaths", 1)
    assert sorted(g.degrees) == [1, 1, 1, 1, 4]


@given(st.integers(1, 8), st.integers(1, 6))
def test_compound_sizes(n, k):
    g = star(k)
    assert compound(g, 0, "OnePath", n).n == g.n + n
    assert compound(g, 0, "TwoPaths", n).n == g.n + 2 * n


def test_xy_bridge_examples():
    assert iso(xy_bridge(path(1), 0, path(1), 0, 0), path(2))
    assert iso(xy_bridge(path(1), 0, path(1), 0, 3), path(5))
    g = xy_bridge(star(3), 0, star(3), 0, 2)
    assert g.n == 10 and g.m == 9 and diameter(g) == 5


def test_family_enum_covers_spec_names():
    names = {f.value for f in Family}
    assert names == {"Path", "Cycle", "Star", "TShape", "HShape", "DoubleSnake", "Caterpillar",
                     "Dagger", "DirectedCycle", "CTilde", "CTildePrime", "CTildeDoublePrime",
                     "BoxABCD"}
