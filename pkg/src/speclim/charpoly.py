"""Characteristic polynomials of A_alpha for paths, cycles and their trimmed
variants, evaluated at a point (lam, alpha).

Notation used throughout:

* ``phi_path(n)``  is det(lam I - A_alpha(P_n)), with the convention
  phi(P_0) = (1 - 2 alpha) / (1 - alpha)^2.
* ``phi_B(n)``  deletes one end vertex from A_alpha(P_{n+1}).
* ``phi_H(n)``  deletes both end vertices from A_alpha(P_{n+2}).

With ``disc = sqrt((lam - 4 alpha + 2)(lam - 2))`` the two roots of
x^2 - (lam - 2 alpha) x + (1 - alpha)^2 are ``s`` and ``t`` (s >= t), and
``h = (lam - disc) / (2 alpha (lam - 2) + 2)`` is the limiting ratio of
consecutive trimmed path polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, ParameterError
from .matrices import a_alpha
from .spectra import charpoly_eval, principal_minor_charpoly


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class AlphaPoint:
    lam: float
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise ParameterError(f"alpha must lie in [0, 1), got {self.alpha}")


def _pt(p, alpha=None) -> AlphaPoint:
    return p if isinstance(p, AlphaPoint) else AlphaPoint(float(p), float(alpha))


def _two_term(first: float, second: float, n: int, lam: float, alpha: float) -> float:
    """Run x_{k+1} = (lam - 2a) x_k - (1-a)^2 x_{k-1} from (x_0, x_1) up to x_n."""
    if n == 0:
        return first
    a, b = first, second
    c = lam - 2 * alpha
    d = (1 - alpha) ** 2
    for _ in range(n - 1):
        a, b = b, c * b - d * a
    return b


def phi_path(n: int, p: AlphaPoint | float, alpha: float | None = None) -> float:
    p = _pt(p, alpha)
    if n < 0:
        raise ParameterError("n must be non-negative")
    lam, al = p.lam, p.alpha
    # P_1 = lam (an isolated vertex has degree 0); P_0 makes the recurrence hold at n = 1
    return _two_term((1 - 2 * al) / (1 - al) ** 2, lam, n, lam, al)


def phi_H(n: int, p: AlphaPoint | float, alpha: float | None = None) -> float:
    p = _pt(p, alpha)
    if n < 0:
        raise ParameterError("n must be non-negative")
    return _two_term(1.0, p.lam - 2 * p.alpha, n, p.lam, p.alpha)


def phi_B(n: int, p: AlphaPoint | float, alpha: float | None = None) -> float:
    p = _pt(p, alpha)
    if n < 0:
        raise ParameterError("n must be non-negative")
    if p.alpha == 0.0:
        return phi_path(n, p)
    # B_k = P_k - alpha B_{k-1}; track P alongside
    lam, al = p.lam, p.alpha
    c, d = lam - 2 * al, (1 - al) ** 2
    p_prev, p_cur = (1 - 2 * al) / d, lam  # P_0, P_1
    b = 1.0
    for k in range(1, n + 1):
        b = p_cur - al * b
        p_prev, p_cur = p_cur, c * p_cur - d * p_prev
    return b


def phi_cycle(m: int, p: AlphaPoint | float, alpha: float | None = None) -> float:
    """det(lam I - A_alpha(C_m)) for m >= 3, via the trimmed-path recurrence."""
    p = _pt(p, alpha)
    if m < 3:
        raise ParameterError("cycles need at least 3 vertices")
    n = m - 2
    lam, al = p.lam, p.alpha
    return ((lam - 2 * al) * phi_H(n + 1, p) - 2 * (al - 1) ** 2 * phi_H(n, p)
            + 2 * (-1) ** (n + 1) * (al - 1) ** (n + 2))


@dataclass(frozen=True)
class ClosedForms:
    disc: float
    h: float
    s: float
    t: float


def closed_forms(p: AlphaPoint | float, alpha: float | None = None) -> ClosedForms:
    p = _pt(p, alpha)
    lam, al = p.lam, p.alpha
    rad = (lam - 4 * al + 2) * (lam - 2)
    if rad < 0:
        raise DomainError(f"(lam - 4 alpha + 2)(lam - 2) < 0 at lam={lam}, alpha={al}")
    disc = math.sqrt(rad)
    s = (lam - 2 * al + disc) / 2
    t = (lam - 2 * al - disc) / 2
    h = (lam - disc) / (2 * al * (lam - 2) + 2)
    return ClosedForms(disc, h, s, t)


def h_ratio(lam: float, alpha: float) -> float:
    return closed_forms(AlphaPoint(lam, alpha)).h


def phi_H_closed(n: int, p: AlphaPoint) -> float:
    c = closed_forms(p)
    return (c.s ** (n + 1) - c.t ** (n + 1)) / c.disc


def phi_path_closed(n: int, p: AlphaPoint) -> float:
    """Closed form of phi(P_n) for n >= 1."""
    c = closed_forms(p)
    a = p.alpha
    k = n - 1
    return ((c.s + a) ** 2 * c.s ** k - (c.t + a) ** 2 * c.t ** k) / c.disc


def phi_B_closed(n: int, p: AlphaPoint) -> float:
    """Closed form of phi(B_n) for n >= 1 and alpha in (0, 1)."""
    c = closed_forms(p)
    a, lam = p.alpha, p.lam
    if a == 0.0:
        raise DomainError("the closed form for B_n needs alpha > 0")
    k = n - 1
    q = (1 - a) ** 2 / a
    pref = a / (c.disc * (a * (lam - 2) + 1))
    return pref * ((c.s + a) ** 2 * (c.s + q) * c.s ** k - (c.t + a) ** 2 * (c.t + q) * c.t ** k)


@dataclass(frozen=True)
class RatioReport:
    h: float
    n: int
    ratio_b_over_p: float
    ratio_h_over_b: float
    err_b_over_p: float
    err_h_over_b: float


def ratio_limits(p: AlphaPoint | float, n_max: int = 200, alpha: float | None = None) -> RatioReport:
    """Compare phi(B_{n-1})/phi(P_n) and phi(H_{n-2})/phi(B_{n-1}) at n = n_max with h.

    The recurrences are run on rescaled values so large n does not overflow.
    """
    p = _pt(p, alpha)
    if p.lam <= 2:
        raise DomainError("ratios only converge for lam > 2")
    if n_max < 2:
        raise ParameterError("n_max must be at least 2")
    lam, al = p.lam, p.alpha
    c, d = lam - 2 * al, (1 - al) ** 2
    # Forward B_k = P_k - alpha B_{k-1} amplifies rounding along (-alpha)^k, which
    # beats s^k when s < alpha, so for alpha > 0 B_{n-1} comes from P_{n-1}, P_n:
    # (alpha (lam - 2) + 1) B_{n-1} = alpha P_n + (1 - alpha)^2 P_{n-1}.
    p0, p1 = (1 - 2 * al) / d, lam      # P_{k-1}, P_k
    h0, h1 = 0.0, 1.0                   # H_{k-2}, H_{k-1}; H_{-1} = 0 fits the recurrence
    for _ in range(1, n_max):
        p0, p1 = p1, c * p1 - d * p0
        h0, h1 = h1, c * h1 - d * h0
        scale = abs(p1)
        if scale > 1e100 or scale < 1e-100:
            p0, p1, h0, h1 = p0 / scale, p1 / scale, h0 / scale, h1 / scale
    # multiplied through by alpha, so alpha = 0 gives B_{n-1} = P_{n-1} and tiny alpha stays finite
    b = (al * p1 + d * p0) / (al * (lam - 2) + 1)
    h = closed_forms(p).h
    r1 = b / p1
    r2 = h0 / b
    return RatioReport(h, n_max, r1, r2, abs(r1 - h), abs(r2 - h))


def join_phi(g1: Graph, u: int, g2: Graph, v: int, p: AlphaPoint | float,
             alpha: float | None = None) -> float:
    """phi of the bridge graph g1 u:v g2 from the pieces' polynomials."""
    p = _pt(p, alpha)
    lam, al = p.lam, p.alpha
    m1, m2 = a_alpha(g1, al), a_alpha(g2, al)
    f1, f2 = charpoly_eval(m1, lam), charpoly_eval(m2, lam)
    f1u = principal_minor_charpoly(m1, lam, [u])
    f2v = principal_minor_charpoly(m2, lam, [v])
    return f1 * f2 - al * f1u * f2 - al * f1 * f2v + (2 * al - 1) * f1u * f2v


def path_b_matrix(n: int, alpha: float) -> np.ndarray:
    """A_alpha(P_{n+1}) with the first end vertex removed."""
    m = np.asarray(a_alpha(_path(n + 1), alpha).entries)
    return m[1:, 1:]


def path_h_matrix(n: int, alpha: float) -> np.ndarray:
    """A_alpha(P_{n+2}) with both end vertices removed."""
    m = np.asarray(a_alpha(_path(n + 2), alpha).entries)
    return m[1:-1, 1:-1]


def _path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


__all__ = ["AlphaPoint", "ClosedForms", "DomainError", "RatioReport", "closed_forms",
           "h_ratio", "join_phi", "phi_B", "phi_B_closed", "phi_H", "phi_H_closed",
           "phi_cycle", "phi_path", "phi_path_closed", "path_b_matrix", "path_h_matrix",
           "ratio_limits"]

