"""Eigenvalues and spectral radii of the matrix models."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import matrices as mx
from .graphs import Graph, MixedGraph, OrientedGraph, ParameterError, SignedGraph
from .matrices import DenseMatrix, Symmetry


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues.  For skew matrices these are the real numbers mu with
    i*mu an eigenvalue, so ``radius`` is still the largest modulus."""

    eigenvalues: tuple
    radius: float


def _eig_hermitian(a: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if a.shape[0] == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(a)


def eigenvalues(m: DenseMatrix) -> Spectrum:
    if m.symmetry is Symmetry.GENERAL:
        raise ParameterError("general matrices are not supported")
    if m.symmetry is Symmetry.SKEW:
        # S real skew  =>  i*S Hermitian with eigenvalues -mu for each i*mu of S
        ev = -_eig_hermitian(1j * np.asarray(m.entries, dtype=float))[::-1]
    elif m.symmetry is Symmetry.SYMMETRIC and m.is_real:
        ev = _eig_hermitian(np.real(m.entries).astype(float))
    else:
        ev = _eig_hermitian(np.asarray(m.entries, dtype=complex))
    ev = np.sort(ev)
    radius = float(np.max(np.abs(ev))) if ev.size else 0.0
    return Spectrum(tuple(float(x) for x in ev), radius)


class Model(str, enum.Enum):
    A = "A"
    L = "L"
    Q = "Q"
    AALPHA = "Aalpha"
    SIGNED = "Signed"
    HERMITIAN = "Hermitian"
    SKEW = "Skew"


def model_matrix(g, model: Model | str, alpha: float | None = None) -> DenseMatrix:
    model = Model(model)
    if model is Model.AALPHA and alpha is None:
        raise ParameterError("the Aalpha model needs alpha")
    if model is Model.SIGNED:
        if not isinstance(g, SignedGraph):
            raise ParameterError("the Signed model needs a signed graph")
        return mx.signed_adjacency(g)
    if model is Model.HERMITIAN:
        if isinstance(g, Graph):
            g = MixedGraph.from_graph(g)
        if not isinstance(g, MixedGraph):
            raise ParameterError("the Hermitian model needs a mixed graph")
        return mx.hermitian_adjacency(g)
    if model is Model.SKEW:
        if not isinstance(g, OrientedGraph):
            raise ParameterError("the Skew model needs an oriented graph")
        return mx.skew_adjacency(g)
    if not isinstance(g, Graph):
        raise ParameterError(f"the {model.value} model needs an undirected graph")
    if model is Model.A:
        return mx.adjacency(g)
    if model is Model.L:
        return mx.laplacian(g)
    if model is Model.Q:
        return mx.signless_laplacian(g)
    return mx.a_alpha(g, alpha)


def spectrum(g, model: Model | str, alpha: float | None = None) -> Spectrum:
    return eigenvalues(model_matrix(g, model, alpha))


def spectral_radius(g, model: Model | str = Model.A, alpha: float | None = None) -> float:
    return spectrum(g, model, alpha).radius


def charpoly_eval(m: DenseMatrix | np.ndarray, lam: float) -> float:
    """det(lam*I - M) for real symmetric M, through an LU-based log-determinant."""
    a = m.real() if isinstance(m, DenseMatrix) else np.asarray(m, dtype=float)
    n = a.shape[0]
    if n == 0:
        return 1.0
    sign, logdet = np.linalg.slogdet(lam * np.eye(n) - a)
    return float(sign * np.exp(logdet))


def principal_minor_charpoly(m: DenseMatrix | np.ndarray, lam: float, drop) -> float:
    """det(lam*I - M) with the rows and columns in ``drop`` removed."""
    a = m.real() if isinstance(m, DenseMatrix) else np.asarray(m, dtype=float)
    keep = [i for i in range(a.shape[0]) if i not in set(drop)]
    return charpoly_eval(a[np.ix_(keep, keep)], lam)


def batch_radius(adjacency_stack: np.ndarray, alpha: float = 0.0) -> np.ndarray:
    """Largest A_alpha eigenvalue for a stack of 0/1 adjacency matrices."""
    a = np.asarray(adjacency_stack, dtype=float)
    if alpha:
        deg = a.sum(axis=2)
        a = (1 - alpha) * a
        idx = np.arange(a.shape[1])
        a[:, idx, idx] += alpha * deg
    return np.linalg.eigvalsh(a)[:, -1]
