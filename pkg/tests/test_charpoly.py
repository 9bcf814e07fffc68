from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from speclim.charpoly import (AlphaPoint, DomainError, closed_forms, h_ratio, join_phi, path_b_matrix,
                              path_h_matrix, phi_B, phi_B_closed, phi_cycle, phi_H, phi_H_closed,
                              phi_path, phi_path_closed, ratio_limits)
from speclim.graphs import ParameterError, cycle, join_graphs, path, star

from oracles import a_alpha_from_edges, det_mp

ALPHAS = [0.0, 0.2, 0.5, 0.8]
LAMS = [2.1, 3.0, 5.0]
GRID = [(n, a, lam) for n in range(1, 13) for a in ALPHAS for lam in LAMS]


def rel(x: float, ref: float) -> float:
    return abs(x - ref) / max(abs(ref), 1e-300)


def path_matrix(n: int, alpha: float) -> np.ndarray:
    return a_alpha_from_edges(n, [(i, i + 1) for i in range(n - 1)], alpha)


# --- examples ---------------------------------------------------------------


def test_phi_path_examples():
    assert phi_path(1, 3, 0) == 3  # TRIVIAL
    lam = (1 + 5 ** 0.5) / 2
    assert abs(phi_path(4, lam, 0)) < 1e-12  # DERIVED


def test_phi_path_base_case():
    assert phi_path(0, 2.5, 0.3) == pytest.approx((1 - 0.6) / 0.49)
    assert phi_B(0, 2.5, 0.3) == 1 and phi_H(0, 2.5, 0.3) == 1


def test_alpha_one_is_rejected():
    with pytest.raises(ParameterError):
        phi_path(3, 2.5, 1.0)
    with pytest.raises(ParameterError):
        AlphaPoint(2.5, 1.0)


def test_phi_cycle_examples():
    for m in range(3, 10):
        for a in (0, 0.3, 0.9):
            assert abs(phi_cycle(m, 2, a)) < 1e-9  # TRIVIAL: 2 is the Perron value
    assert abs(phi_cycle(3, -1, 0)) < 1e-12
    assert abs(phi_cycle(4, 2, 0.5)) < 1e-12
    with pytest.raises(ParameterError):
        phi_cycle(2, 3, 0)


def test_closed_form_examples():
    c = closed_forms(AlphaPoint(2.5, 0))
    assert (c.disc, c.h, c.s, c.t) == pytest.approx((1.5, 0.5, 2.0, 0.5), abs=1e-15)  # DERIVED
    for a in (0, 0.3, 0.7):
        c = closed_forms(AlphaPoint(2, a))
        assert c.disc == 0 and c.s == pytest.approx(1 - a) and c.t == pytest.approx(1 - a)
    with pytest.raises(DomainError):
        closed_forms(AlphaPoint(1.5, 0.2))


@given(st.floats(2, 10), st.floats(0, 0.99))
def test_closed_form_identities(lam, a):
    c = closed_forms(AlphaPoint(lam, a))
    assert c.s * c.t == pytest.approx((1 - a) ** 2, rel=1e-10, abs=1e-12)
    assert c.s + c.t == pytest.approx(lam - 2 * a, rel=1e-12, abs=1e-12)
    assert c.h == pytest.approx((c.t + a) / (a * (lam - 2) + 1), rel=1e-9, abs=1e-12)
    for x in (c.s, c.t):
        assert (x + a) ** 2 == pytest.approx(lam * x + 2 * a - 1, rel=1e-10, abs=1e-10)


# --- recurrences vs high-precision determinants -----------------------------


@pytest.mark.parametrize("n,a,lam", GRID)
def test_recurrences_match_determinants(n, a, lam):
    assert rel(phi_path(n, lam, a), det_mp(path_matrix(n, a), lam)) < 1e-8
    assert rel(phi_B(n, lam, a), det_mp(path_b_matrix(n, a), lam)) < 1e-8
    assert rel(phi_H(n, lam, a), det_mp(path_h_matrix(n, a), lam)) < 1e-8
    if n >= 3:
        m = a_alpha_from_edges(n, sorted(cycle(n).edges), a)
        assert rel(phi_cycle(n, lam, a), det_mp(m, lam)) < 1e-8


def test_trimmed_path_matrices_shape():
    b = path_b_matrix(3, 0.5)
    assert b.shape == (3, 3) and b[-1, -1] == 0.5 and b[0, 0] == 1.0
    h = path_h_matrix(3, 0.5)
    assert h.shape == (3, 3) and np.all(np.diag(h) == 1.0)


@pytest.mark.parametrize("n,a,lam", GRID)
def test_closed_forms_match_recurrences(n, a, lam):
    p = AlphaPoint(lam, a)
    assert rel(phi_H_closed(n, p), phi_H(n, p)) < 1e-8
    assert rel(phi_path_closed(n, p), phi_path(n, p)) < 1e-8
    if a > 0:
        assert rel(phi_B_closed(n, p), phi_B(n, p)) < 1e-8


@pytest.mark.parametrize("n,a,lam", [g for g in GRID if g[1] > 0])
def test_trimmed_path_identity(n, a, lam):
    # (lam + 1/a - 2) phi(B_n) = phi(P_{n+1}) + ((1-a)^2/a) phi(P_n), from determinants
    b = det_mp(path_b_matrix(n, a), lam)
    lhs = (lam + 1 / a - 2) * b
    rhs = det_mp(path_matrix(n + 1, a), lam) + (1 - a) ** 2 / a * det_mp(path_matrix(n, a), lam)
    assert rel(lhs, rhs) < 1e-8
    assert rel((lam + 1 / a - 2) * phi_B(n, lam, a),
               phi_path(n + 1, lam, a) + (1 - a) ** 2 / a * phi_path(n, lam, a)) < 1e-8


@pytest.mark.parametrize("n,a,lam", GRID)
def test_path_from_doubly_trimmed_paths(n, a, lam):
    lhs = det_mp(path_matrix(n + 1, a), lam)
    rhs = lam * det_mp(path_h_matrix(n, a), lam) + (2 * a - 1) * det_mp(path_h_matrix(n - 1, a), lam)
    assert rel(lhs, rhs) < 1e-8
    assert rel(phi_path(n + 1, lam, a), lam * phi_H(n, lam, a) + (2 * a - 1) * phi_H(n - 1, lam, a)) < 1e-8


@pytest.mark.parametrize("n", range(0, 21))
@pytest.mark.parametrize("a", [0.0, 0.3, 0.7])
@pytest.mark.parametrize("lam", [2.2, 3.0, 4.0])
def test_phi_h_closed_form_grid(n, a, lam):
    p = AlphaPoint(lam, a)
    assert rel(phi_H_closed(n, p), phi_H(n, p)) < 1e-8


# --- ratio limits -----------------------------------------------------------


def test_ratio_examples():
    r = ratio_limits(AlphaPoint(2.5, 0), 200)
    assert r.h == pytest.approx(0.5)
    assert r.err_b_over_p < 1e-6 and r.err_h_over_b < 1e-6
    r = ratio_limits(AlphaPoint(3, 0), 200)
    assert r.h == pytest.approx((3 - 5 ** 0.5) / 2, abs=1e-14)
    r = ratio_limits(AlphaPoint(3, 0.5), 200)
    assert r.h == pytest.approx((3 - math.sqrt(3)) / 3, abs=1e-14)  # DERIVED: disc = sqrt(3)


@given(st.floats(2.05, 6), st.floats(0, 0.9))
def test_ratios_converge(lam, a):
    r = ratio_limits(AlphaPoint(lam, a), 200)
    assert r.err_b_over_p < 1e-6 and r.err_h_over_b < 1e-6


def test_ratio_domain():
    with pytest.raises(DomainError):
        ratio_limits(AlphaPoint(2.0, 0.3), 50)


def test_h_ratio_matches_closed_forms():
    assert h_ratio(2.5, 0.0) == 0.5


# --- join formula -----------------------------------------------------------


def test_join_two_single_vertices():
    want = det_mp(a_alpha_from_edges(2, [(0, 1)], 0.3), 3.0)  # DERIVED: 2x2 determinant
    assert rel(join_phi(path(1), 0, path(1), 0, 3.0, 0.3), want) < 1e-8


def test_join_star_with_vertex_gives_larger_star():
    for a in ALPHAS:
        for lam in LAMS:
            want = det_mp(a_alpha_from_edges(5, sorted(star(4).edges), a), lam)
            assert rel(join_phi(star(3), 0, path(1), 0, lam, a), want) < 1e-8


def test_join_at_half_drops_cross_term():
    from speclim.matrices import a_alpha
    from speclim.spectra import charpoly_eval, principal_minor_charpoly
    g1, g2, lam = path(3), star(2), 2.7
    m1, m2 = a_alpha(g1, 0.5), a_alpha(g2, 0.5)
    f1, f2 = charpoly_eval(m1, lam), charpoly_eval(m2, lam)
    f1u, f2v = principal_minor_charpoly(m1, lam, [0]), principal_minor_charpoly(m2, lam, [0])
    assert join_phi(g1, 0, g2, 0, lam, 0.5) == pytest.approx(f1 * f2 - (f1u * f2 + f1 * f2v) / 2, rel=1e-12)


@given(st.integers(1, 5), st.integers(1, 5), st.sampled_from(ALPHAS), st.sampled_from(LAMS), st.data())
def test_join_matches_determinant(n1, n2, a, lam, data):
    g1, g2 = path(n1), star(n2)
    u = data.draw(st.integers(0, g1.n - 1))
    v = data.draw(st.integers(0, g2.n - 1))
    g = join_graphs(g1, u, g2, v)
    want = det_mp(a_alpha_from_edges(g.n, sorted(g.edges), a), lam)
    assert rel(join_phi(g1, u, g2, v, lam, a), want) < 1e-8
