"""Limit points of spectral radii and the sequences that approach them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .charpoly import closed_forms, AlphaPoint
from .graphs import Graph, ParameterError, caterpillar, compound, t_shape
from .matrices import a_alpha
from .spectra import charpoly_eval, principal_minor_charpoly, spectral_radius


@dataclass(frozen=True)
class LimitReport:
    value: float
    defining_equation: str
    bracket: tuple
    iterations: int
    residual: float
    extra: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        d = {"value": self.value, "equation": self.defining_equation,
             "bracket": list(self.bracket), "iterations": self.iterations,
             "residual": self.residual}
        d.update(self.extra)
        return d


# ---------------------------------------------------------------------------
# root finding


def bisect(f: Callable[[float], float], lo: float, hi: float, max_iter: int = 400):
    """Shrink a sign-change bracket to adjacent floats.  Returns (root, lo, hi, iterations)."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo, lo, lo, 0
    if fhi == 0:
        return hi, hi, hi, 0
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    it = 0
    while it < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        it += 1
        if fm == 0:
            return mid, mid, mid, it
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    root = lo if abs(flo) <= abs(fhi) else hi
    return root, lo, hi, it


def largest_root(f: Callable[[float], float], lo: float, hi: float, steps: int = 2000):
    """Scan downward from ``hi`` and bisect the first sign change.  None if none found."""
    grid = np.linspace(hi, lo, steps + 1)
    prev_x, prev_f = grid[0], f(grid[0])
    if prev_f == 0:
        return prev_x, prev_x, prev_x, 0
    for x in grid[1:]:
        fx = f(x)
        if fx == 0 or (fx > 0) != (prev_f > 0):
            root, a, b, it = bisect(f, float(x), float(prev_x))
            return root, a, b, it
        prev_x, prev_f = x, fx
    return None


def _widen(lo: float, hi: float, value: float) -> tuple:
    # brackets from bisection may collapse onto the root; keep lo < value < hi
    lo = min(lo, np.nextafter(value, -np.inf))
    hi = max(hi, np.nextafter(value, np.inf))
    return (float(lo), float(hi))


# ---------------------------------------------------------------------------
# named constants


@dataclass(frozen=True)
class Constants:
    tau: float
    rho1: float
    rho2: float
    omega: float
    epsilon: float
    tau1: float
    tau2: float

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def constants() -> Constants:
    r33 = math.sqrt(33.0)
    omega = ((19 + 3 * r33) ** (1 / 3) + (19 - 3 * r33) ** (1 / 3) + 1) / 3
    epsilon = ((54 - 6 * r33) ** (1 / 3) + (54 + 6 * r33) ** (1 / 3)) / 3
    r5 = math.sqrt(5.0)
    return Constants(
        tau=(r5 + 1) / 2,
        rho1=math.sqrt(2 + r5),
        rho2=1.5 * math.sqrt(2.0),
        omega=omega,
        epsilon=epsilon,
        tau1=2 + r5,
        tau2=2 + epsilon,
    )


# ---------------------------------------------------------------------------
# adjacency and Laplacian limit-point sequences


def _hoffman_scaled(n: int) -> Callable[[float], float]:
    # x^{n+1} - (1 + ... + x^{n-1}) = 0, multiplied by (x - 1) / x^n
    return lambda x: x * x - x - 1 + x ** (-n)


def hoffman_eta(n: int) -> LimitReport:
    """eta_n = sqrt(beta) + 1/sqrt(beta), beta the positive root of
    x^{n+1} = 1 + x + ... + x^{n-1}."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    tag = f"x^{n + 1} - (1 + ... + x^{n - 1}) = 0 (scaled: x^2 - x - 1 + x^-{n})"
    if n == 1:
        beta, lo, hi, it = 1.0, 1.0, 1.0, 0
        resid = 0.0
    else:
        g = _hoffman_scaled(n)
        # x = 1 is a spurious root of the scaled form; the true one lies in (1.2, 2]
        beta, lo, hi, it = bisect(g, 1.2, 2.0)
        resid = abs(g(beta))
    eta = math.sqrt(beta) + 1 / math.sqrt(beta)
    e = lambda b: math.sqrt(b) + 1 / math.sqrt(b)  # noqa: E731
    return LimitReport(eta, tag, _widen(e(lo), e(hi), eta), it, resid, {"beta": beta, "n": n})


def _guo_scaled(n: int) -> Callable[[float], float]:
    # x^{n+1} - (1 + ... + x^{n-1})(sqrt(x) + 1)^2 = 0, multiplied by (x - 1) / x^n
    return lambda x: x * x - x - (1 - x ** (-n)) * (math.sqrt(x) + 1) ** 2


def guo_alpha(n: int) -> LimitReport:
    """alpha_n = 2 + sqrt(beta) + 1/sqrt(beta), beta the largest root of
    x^{n+1} = (1 + ... + x^{n-1})(sqrt(x) + 1)^2, with beta_0 = 1."""
    if n < 0:
        raise ParameterError("n must be >= 0")
    tag = f"x^{n + 1} - (1 + ... + x^{n - 1})(sqrt(x) + 1)^2 = 0 (scaled by (x - 1)/x^{n})"
    if n == 0:
        beta, lo, hi, it, resid = 1.0, 1.0, 1.0, 0, 0.0
    else:
        g = _guo_scaled(n)
        found = largest_root(g, 1.0 + 1e-9, 8.0, steps=700)
        if found is None:  # pragma: no cover - the bracket always holds
            raise RuntimeError("no root found for the Laplacian limit-point equation")
        beta, lo, hi, it = found
        resid = abs(g(beta))
    val = 2 + math.sqrt(beta) + 1 / math.sqrt(beta)
    e = lambda b: 2 + math.sqrt(b) + 1 / math.sqrt(b)  # noqa: E731
    return LimitReport(val, tag, _widen(e(lo), e(hi), val), it, resid, {"beta": beta, "n": n})


# ---------------------------------------------------------------------------
# A_alpha thresholds


_CUBICS = {
    "s2": ((2, -11, 16, -3), (0.219, 0.220)),
    "s3": ((1, -6, 9, -1), (0.120, 0.121)),
    "s4": ((2, -13, 20, -1), (0.051, 0.052)),
}


@dataclass(frozen=True)
class Thresholds:
    s1: float | None
    s2: float
    s3: float
    s4: float
    residuals: dict


def s1_threshold(n: int) -> float:
    if n < 4:
        raise ParameterError("s1 needs n >= 4")
    return 4.0 / (n + 1 + math.sqrt((n + 1) ** 2 - 16))


def aalpha_thresholds(n: int | None = None) -> Thresholds:
    vals, res = {}, {}
    for name, (coef, (wlo, whi)) in _CUBICS.items():
        poly = np.poly1d(coef)
        f = lambda a, p=poly: float(p(a))  # noqa: E731
        root, _, _, _ = bisect(f, wlo, whi)
        vals[name], res[name] = root, abs(f(root))
    s1 = s1_threshold(n) if n is not None else None
    return Thresholds(s1, vals["s2"], vals["s3"], vals["s4"], res)


# ---------------------------------------------------------------------------
# compound graphs


def _is_path_end(g: Graph, u: int) -> bool:
    if g.n == 1:
        return True
    return g.is_tree() and g.max_degree <= 2 and g.degree(u) == 1


def _check_alpha(alpha: float):
    if not 0.0 <= alpha < 1.0:
        raise ParameterError(f"alpha must lie in [0, 1), got {alpha}")


def _pieces(g: Graph, u: int, alpha: float):
    m = a_alpha(g, alpha).real()
    def phi(lam):
        return charpoly_eval(m, lam)
    def phi_u(lam):
        return principal_minor_charpoly(m, lam, [u])
    return phi, phi_u


def _degenerate(tag: str) -> LimitReport:
    return LimitReport(2.0, tag, _widen(2.0, 2.0, 2.0), 0, 0.0, {"degenerate": True})


def _solve_limit(eq: Callable[[float], float], scale: Callable[[float], float], hi: float,
                 tag: str) -> LimitReport:
    lo = 2.0 + 1e-12
    found = largest_root(eq, lo, hi, steps=4000)
    if found is None:
        return _degenerate(tag + " [degenerate: no root above 2]")
    root, a, b, it = found
    resid = abs(eq(root)) / scale(root)
    return LimitReport(float(root), tag, _widen(a, b, root), it, float(resid), {"degenerate": False})


def chi_u(g: Graph, u: int, alpha: float = 0.0) -> LimitReport:
    """Limit of the A_alpha spectral radius of g with a growing pendant path at u."""
    _check_alpha(alpha)
    tag = "(1 - a h) phi(G) - (a - (2a - 1) h) phi(G)_u = 0"
    if _is_path_end(g, u):
        return _degenerate(tag + " [degenerate: compound is a path]")
    phi, phi_u = _pieces(g, u, alpha)

    def eq(lam):
        h = closed_forms(AlphaPoint(lam, alpha)).h
        return (1 - alpha * h) * phi(lam) - (alpha - (2 * alpha - 1) * h) * phi_u(lam)

    def scale(lam):
        return abs(phi(lam)) + abs(phi_u(lam)) + 1.0

    # the limit never exceeds the maximum degree of the compound graph
    hi = float(max(g.max_degree, g.degree(u) + 1, 2)) + 0.5
    return _solve_limit(eq, scale, hi, tag)


def chi2_u(g: Graph, u: int, alpha: float = 0.0) -> LimitReport:
    """Limit with two growing pendant paths at u."""
    _check_alpha(alpha)
    tag = "(1 - a h)(phi(G)(1 - a h) - 2a phi(G)_u + 2(2a - 1) phi(G)_u h) = 0"
    if g.n == 1:
        return _degenerate(tag + " [degenerate: compound is a path]")
    phi, phi_u = _pieces(g, u, alpha)

    def eq(lam):
        h = closed_forms(AlphaPoint(lam, alpha)).h
        q = 1 - alpha * h
        return q * (phi(lam) * q - 2 * alpha * phi_u(lam) + 2 * (2 * alpha - 1) * phi_u(lam) * h)

    def scale(lam):
        return abs(phi(lam)) + abs(phi_u(lam)) + 1.0

    hi = float(max(g.max_degree, g.degree(u) + 2, 2)) + 0.5
    return _solve_limit(eq, scale, hi, tag)


def xy_limit(x_graph: Graph, x: int, y_graph: Graph, y: int, alpha: float = 0.0) -> LimitReport:
    """Limit for two graphs joined by a growing path: the larger one-sided limit."""
    a = chi_u(x_graph, x, alpha)
    b = chi_u(y_graph, y, alpha)
    best = a if a.value >= b.value else b
    extra = dict(best.extra, sides=[a.value, b.value])
    return LimitReport(best.value, "max(chi_x(X), chi_y(Y))", best.bracket,
                       a.iterations + b.iterations, best.residual, extra)


def k13_limit_closed_form(alpha: float) -> float:
    return (5 * alpha + 3 * math.sqrt(2 - 4 * alpha + 3 * alpha * alpha)) / 2


def compound_radii(g: Graph, u: int, alpha: float, ns, two_paths: bool = False) -> list[float]:
    kind = "TwoPaths" if two_paths else "OnePath"
    return [spectral_radius(compound(g, u, kind, n), "Aalpha", alpha) for n in ns]


# ---------------------------------------------------------------------------
# approaching any value above rho1 with caterpillars


@dataclass(frozen=True)
class ShearerStep:
    pendants: tuple
    graph: Graph
    radius: float


@dataclass(frozen=True)
class ShearerRun:
    target: float
    steps: list
    converged: bool
    rule: str

    @property
    def radii(self) -> list[float]:
        return [s.radius for s in self.steps]


def _greedy_counts(lam: float, k: int) -> list[int]:
    """Pendant counts for spine vertices 1..k.

    Pendant leaves are eliminated first, then the spine is factored front to back:
    pivot_i = lam - k_i / lam - 1 / pivot_{i-1}.  An infinite bare spine continues
    positive exactly when the pivot stays above the smaller fixed point
    t = (lam - sqrt(lam^2 - 4)) / 2 of x -> lam - 1/x, so each k_i is the largest
    count keeping the pivot above t.  That keeps every caterpillar (and all its
    extensions) below lam, while the margin to lam shrinks.
    """
    t = (lam - math.sqrt(lam * lam - 4)) / 2
    counts = []
    prev = math.inf
    for _ in range(k):
        base = lam - (1 / prev if prev != math.inf else 0.0)
        ki = max(0, math.floor((base - t) * lam))
        while ki > 0 and base - ki / lam <= t:
            ki -= 1
        while base - (ki + 1) / lam > t:
            ki += 1
        counts.append(ki)
        prev = base - ki / lam
    return counts


def shearer_approach(target: float, k: int = 60, stop_gap: float = 1e-11) -> ShearerRun:
    """Nested caterpillars whose adjacency index increases toward ``target``.

    Emission stops early once the gap falls below ``stop_gap``; beyond that the
    double-precision radii can no longer show a strict increase.
    """
    c = constants()
    if target < c.rho1 - 1e-9:
        raise ParameterError(f"target must be at least sqrt(2 + sqrt(5)) = {c.rho1:.12f}")
    if k < 1:
        raise ParameterError("k must be >= 1")
    steps: list[ShearerStep] = []
    converged = False
    if target <= c.rho1 + 1e-9:
        # at the bottom of the range the pivot rule only ever adds a single
        # pendant, whose limit is 2; the spiders T(1, m, m) approach rho1 instead
        rule = "spider T(1, m, m), m = 1, 2, ..."
        for m in range(1, k + 1):
            pend = tuple([0] * m + [1] + [0] * m)
            g = t_shape(1, m, m)
            r = spectral_radius(g, "A")
            steps.append(ShearerStep(pend, g, r))
            if target - r < stop_gap:
                converged = True
                break
        return ShearerRun(target, steps, converged, rule)

    rule = "pivot greedy: largest pendant count keeping every pivot above the path fixed point"
    counts = _greedy_counts(target, k)
    last = -math.inf
    for i in range(1, k + 1):
        pend = tuple(counts[:i])
        g = caterpillar(pend)
        r = spectral_radius(g, "A")
        if r <= last:
            # rounding has caught up with the true increase
            converged = True
            break
        steps.append(ShearerStep(pend, g, r))
        last = r
        if target - r < stop_gap:
            converged = True
            break
    return ShearerRun(target, steps, converged, rule)
