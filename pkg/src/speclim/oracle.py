"""Exhaustive sweeps comparing the structural lists with computed spectra."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import classify as C
from .enumeration import adjacency_stack, bounded_radius_codes, connected_codes, graph_from_code
from .graphs import ParameterError, diameter, h_shape, recognize_shape
from .limits import aalpha_thresholds, constants
from .spectra import spectral_radius

ALPHA_DELTA = 1e-3


@dataclass
class VerificationReport:
    theorem_id: str
    n_min: int
    n_max: int
    checked: int = 0
    mismatches: list = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "n_min": self.n_min, "n_max": self.n_max,
                "checked": self.checked, "passed": self.passed,
                "mismatches": [{"edges": [list(e) for e in g], "expected": exp, "observed": obs}
                               for g, exp, obs in self.mismatches],
                "details": self.details}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SPECLIM_THREADS", "1")))
    except ValueError:
        return 1


def _stack_radii(mats: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of each symmetric matrix in the stack (all spectra here are
    either nonnegative-matrix spectra or positive semidefinite, so max == radius)."""
    chunks = np.array_split(mats, max(1, min(_threads(), len(mats))))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        parts = list(pool.map(lambda a: np.linalg.eigvalsh(a)[:, -1] if len(a) else np.zeros(0), chunks))
    return np.concatenate(parts)


def _model_stack(adj: np.ndarray, model: str, alpha: float = 0.0) -> np.ndarray:
    deg = adj.sum(axis=2)
    eye = np.eye(adj.shape[1])[None, :, :]
    if model == "A":
        return adj
    if model == "Q":
        return deg[:, :, None] * eye + adj
    if model == "L":
        return deg[:, :, None] * eye - adj
    if model == "Aalpha":
        return alpha * deg[:, :, None] * eye + (1 - alpha) * adj
    raise ParameterError(f"unknown model {model}")


def _edge_counts(codes: np.ndarray) -> np.ndarray:
    bits = adjacency_stack(codes)
    return (bits.sum(axis=(1, 2)) / 2).astype(int)


# sweep definitions: (model, region whose membership is compared, claim function)
_LIST_SWEEPS = {
    "A_lt2": ("A", "<2", C.adjacency_claim),
    "A_eq2": ("A", "=2", C.adjacency_claim),
    "Q_lt4": ("Q", "<4", C.signless_claim),
    "Q_eq4": ("Q", "=4", C.signless_claim),
    "L_lt4": ("L", "<4", C.laplacian_claim),
    "L_eq4": ("L", "=4", C.laplacian_claim),
}


def _spectral_in(region: str, r: float) -> bool:
    target = 2.0 if region.endswith("2") else 4.0
    if region.startswith("="):
        return abs(r - target) <= C.EQ_TOL
    return r < target - C.EQ_TOL


def _list_sweep(theorem_id: str, n_max: int, n_min: int) -> VerificationReport:
    model, region, claim_fn = _LIST_SWEEPS[theorem_id]
    rep = VerificationReport(theorem_id, n_min, n_max)
    for n in range(n_min, n_max + 1):
        codes = connected_codes(n)
        radii = _stack_radii(_model_stack(adjacency_stack(codes), model))
        edges = _edge_counts(codes)
        for code, r, m in zip(codes, radii, edges):
            # every listed graph has at most as many edges as vertices, apart from
            # the 4-vertex exceptions, so larger graphs are unlisted by construction
            listed = False
            if m <= n or n <= 4:
                g = graph_from_code(code)
                claim = claim_fn(g)
                listed = claim is not None and claim[1] == region
            observed = _spectral_in(region, float(r))
            if listed != observed:
                g = graph_from_code(code)
                rep.mismatches.append((sorted(g.edges), "listed" if listed else "unlisted",
                                       f"radius {float(r):.12g}"))
        rep.checked += len(codes)
    return rep


def alpha_grid(delta: float = ALPHA_DELTA) -> list[float]:
    th = aalpha_thresholds()
    grid = [0.0, 0.5, 1.0]
    for s in (th.s2, th.s3, th.s4):
        grid += [s - delta, s + delta]
    return sorted(grid)


def _aalpha_sweep(n_max: int, n_min: int, alphas=None) -> VerificationReport:
    rep = VerificationReport("Aalpha", n_min, n_max)
    alphas = alpha_grid() if alphas is None else list(alphas)
    rep.details["alphas"] = alphas
    for n in range(n_min, n_max + 1):
        codes = connected_codes(n)
        adj = adjacency_stack(codes)
        edges = _edge_counts(codes)
        graphs = {i: graph_from_code(codes[i]) for i in range(len(codes)) if edges[i] <= n}
        for a in alphas:
            radii = _stack_radii(_model_stack(adj, "Aalpha", a))
            for i, r in enumerate(radii):
                r = float(r)
                observed = "=2" if abs(r - 2) <= C.EQ_TOL else ("<2" if r < 2 else ">2")
                claimed = C.aalpha_claim(graphs[i], a)[1] if i in graphs else ">2"
                if observed != claimed:
                    g = graph_from_code(codes[i])
                    rep.mismatches.append((sorted(g.edges), f"{claimed} at alpha={a:.12g}",
                                           f"radius {r:.12g}"))
            rep.checked += len(codes)
    return rep


def _rho1_sweep(n_max: int, n_min: int) -> VerificationReport:
    """Every connected graph with index below rho1 is on the lists, in the right band."""
    c = constants()
    rep = VerificationReport("A_below_rho1", n_min, n_max)
    for n in range(n_min, n_max + 1):
        codes = bounded_radius_codes(n, c.rho1)
        for code in codes:
            g = graph_from_code(code)
            res = C.classify_A(g)
            if res.agreement is not True:
                rep.mismatches.append((sorted(g.edges), str(res.claimed_region), res.region))
        rep.checked += len(codes)
    return rep


def _quipu_shape_sweep(n_max: int, n_min: int) -> VerificationReport:
    c = constants()
    rep = VerificationReport("quipu_shape", n_min, n_max)
    hits = 0
    for n in range(n_min, n_max + 1):
        codes = bounded_radius_codes(n, c.rho2)
        radii = _stack_radii(adjacency_stack(codes)) if len(codes) else []
        for code, r in zip(codes, radii):
            if r <= c.rho1:
                continue
            hits += 1
            g = graph_from_code(code)
            sh = recognize_shape(g)
            if not (sh.open_quipu or sh.closed_quipu or sh.dagger):
                rep.mismatches.append((sorted(g.edges), "quipu or dagger", f"radius {float(r):.12g}"))
        rep.checked += len(codes)
    rep.details["graphs_in_band"] = hits
    return rep


def _quipu_diameter_sweep(n_max: int, n_min: int) -> VerificationReport:
    c = constants()
    n_min = max(n_min, 6)
    rep = VerificationReport("quipu_diameter", n_min, n_max)
    for n in range(n_min, n_max + 1):
        for code in bounded_radius_codes(n, c.rho2):
            g = graph_from_code(code)
            if not recognize_shape(g).open_quipu:
                continue
            rep.checked += 1
            if not C.diameter_bound_holds(g):
                rep.mismatches.append((sorted(g.edges), f"diameter >= {(2 * n - 2) / 3:.4g}",
                                       f"diameter {diameter(g)}"))
    return rep


def _hshape_sweep(n_max: int, n_min: int) -> VerificationReport:
    """The H-shape convention: listed members fall in (2, rho1), the member
    just below the bar-length bound (when not sporadic) does not."""
    c = constants()
    rep = VerificationReport("hshape_members", n_min, n_max)
    for a in range(1, n_max):
        for cc in range(a, n_max):
            if (a, cc) == (1, 1):
                continue
            bstar = C.h_shape_bound(a, cc)
            cases = [(a, b, cc) for (x, b, y) in C._H_SPORADIC if (x, y) == (a, cc)]
            cases += [(a, bstar, cc), (a, bstar + 1, cc)]
            below = (a, bstar - 1, cc)
            for p in cases:
                g = h_shape(*p)
                if not n_min <= g.n <= n_max:
                    continue
                r = spectral_radius(g)
                rep.checked += 1
                if not 2 < r < c.rho1:
                    rep.mismatches.append((sorted(g.edges), f"HShape{p} in (2, rho1)", f"radius {r:.12g}"))
            if below[1] >= 1 and below not in C._H_SPORADIC:
                g = h_shape(*below)
                if n_min <= g.n <= n_max:
                    r = spectral_radius(g)
                    rep.checked += 1
                    if r < c.rho1:
                        rep.mismatches.append((sorted(g.edges), f"HShape{below} >= rho1",
                                               f"radius {r:.12g}"))
    return rep


THEOREMS = {
    **{k: _list_sweep for k in _LIST_SWEEPS},
    "Aalpha": None,
    "A_below_rho1": None,
    "quipu_shape": None,
    "quipu_diameter": None,
    "hshape_members": None,
}

_DEFAULT_NMAX = {"Aalpha": 8, "A_below_rho1": 12, "quipu_shape": 12, "quipu_diameter": 12,
                 "hshape_members": 30}
_LIMIT_NMAX = {"A_below_rho1": 12, "quipu_shape": 12, "quipu_diameter": 12, "hshape_members": 200}


def verify_theorem(theorem_id: str, n_max: int | None = None, n_min: int = 1) -> VerificationReport:
    """Run one sweep.  Ids: A_lt2, A_eq2, Q_lt4, Q_eq4, L_lt4, L_eq4 (all connected
    graphs, n <= 9), Aalpha (n <= 8 by default, at most 9), A_below_rho1, quipu_shape, quipu_diameter
    (n <= 12, grown inside the bounded class) and hshape_members."""
    if theorem_id not in THEOREMS:
        raise ParameterError(f"unknown theorem id {theorem_id!r}; known: {sorted(THEOREMS)}")
    n_max = _DEFAULT_NMAX.get(theorem_id, 9) if n_max is None else n_max
    limit = _LIMIT_NMAX.get(theorem_id, 9)
    if n_max > limit:
        raise ParameterError(f"{theorem_id} is limited to n <= {limit}")
    t0 = time.perf_counter()
    if theorem_id in _LIST_SWEEPS:
        rep = _list_sweep(theorem_id, n_max, n_min)
    elif theorem_id == "Aalpha":
        rep = _aalpha_sweep(n_max, n_min)
    elif theorem_id == "A_below_rho1":
        rep = _rho1_sweep(n_max, n_min)
    elif theorem_id == "quipu_shape":
        rep = _quipu_shape_sweep(n_max, n_min)
    elif theorem_id == "quipu_diameter":
        rep = _quipu_diameter_sweep(n_max, n_min)
    else:
        rep = _hshape_sweep(n_max, n_min)
    rep.elapsed = time.perf_counter() - t0
    return rep


__all__ = ["VerificationReport", "THEOREMS", "alpha_grid", "verify_theorem"]
