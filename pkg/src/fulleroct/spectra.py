"""Adjacency and Laplacian spectra with spectral bound checks.

The dense symmetric eigensolver lives in this module: Householder
tridiagonalisation followed by implicit-shift QL sweeps, with optional
eigenvector accumulation.  Graphs at desk scale stay well below the n=5000
dense budget, and the closed-shell predicate needs the whole spectrum, so
nothing sparse or iterative is used.

Eigenvalue signs are classified against an explicit tolerance (default
1e-8); a count that depends on a near-zero eigenvalue is reported as
indeterminate (None) instead of being coin-flipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from fulleroct.graph import EmbeddedGraph, FullereneGraph, GraphError
from fulleroct.transversal import Transversal

DEFAULT_SIGN_TOL = 1e-8
DENSE_BUDGET = 5000
_EPS = float(np.finfo(np.float64).eps)


class SpectraError(GraphError):
    pass


class SizeBudgetError(SpectraError):
    pass


class NotIndependentError(SpectraError):
    pass


# -- dense symmetric eigensolver ---------------------------------------------


def _tridiagonalize(
    mat: np.ndarray, vectors: bool
) -> tuple[np.ndarray, np.ndarray, np.ndarray | None]:
    """Householder reduction to tridiagonal form; returns (d, e, Q) with
    A = Q T Q^T (Q only when vectors are requested)."""
    a = np.array(mat, dtype=np.float64)
    n = a.shape[0]
    q = np.eye(n) if vectors else None
    for k in range(n - 2):
        x = a[k + 1 :, k]
        alpha = float(np.linalg.norm(x))
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        vnorm2 = float(v @ v)
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        sub = a[k + 1 :, k + 1 :]
        w = beta * (sub @ v)
        w2 = w - (beta * float(v @ w) / 2.0) * v
        sub -= np.outer(v, w2)
        sub -= np.outer(w2, v)
        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2 :, k] = 0.0
        a[k, k + 2 :] = 0.0
        if q is not None:
            qsub = q[:, k + 1 :]
            qsub -= beta * np.outer(qsub @ v, v)
    d = np.diag(a).copy()
    e = np.append(np.diag(a, 1).copy(), 0.0)
    return d, e, q


def _tql_implicit(
    d: np.ndarray, e: np.ndarray, z: np.ndarray | None, max_sweeps: int = 50
) -> None:
    """Implicit-shift QL on a symmetric tridiagonal (d, e) in place.

    e[i] couples d[i] and d[i+1]; z columns, when given, accumulate the
    rotations so they end up as eigenvectors.
    """
    n = len(d)
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise SpectraError("eigensolver failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    col = z[:, i + 1].copy()
                    z[:, i + 1] = s * z[:, i] + c * col
                    z[:, i] = c * z[:, i] - s * col
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0


def symmetric_eigensystem(
    mat: np.ndarray, vectors: bool = False
) -> tuple[np.ndarray, np.ndarray | None]:
    """All eigenvalues (ascending) of a real symmetric matrix, and the
    matching eigenvector columns when requested."""
    mat = np.asarray(mat, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise SpectraError("matrix must be square")
    n = mat.shape[0]
    if n == 0:
        return np.array([]), (np.zeros((0, 0)) if vectors else None)
    if n == 1:
        return mat[0, :1].astype(np.float64), (np.eye(1) if vectors else None)
    d, e, q = _tridiagonalize(mat, vectors)
    z = q if vectors else None
    _tql_implicit(d, e, z)
    order = np.argsort(d, kind="stable")
    w = d[order]
    if vectors:
        assert z is not None
        return w, z[:, order]
    return w, None


# -- graph spectra -----------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues with the sign-classification tolerance used."""

    eigenvalues: tuple[float, ...]
    tolerance: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def smallest(self) -> float:
        return self.eigenvalues[0]

    @property
    def largest(self) -> float:
        return self.eigenvalues[-1]

    def positives(self) -> int:
        return sum(1 for x in self.eigenvalues if x > self.tolerance)

    def negatives(self) -> int:
        return sum(1 for x in self.eigenvalues if x < -self.tolerance)

    def zeros(self) -> int:
        return self.n - self.positives() - self.negatives()


def adjacency_matrix(g: EmbeddedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian_matrix(g: EmbeddedGraph) -> np.ndarray:
    a = -adjacency_matrix(g)
    for v in range(g.n):
        a[v, v] = g.degree(v)
    return a


def _budget_check(n: int):
    if n > DENSE_BUDGET:
        raise SizeBudgetError(f"n = {n} exceeds the dense solve budget {DENSE_BUDGET}")


def adjacency_spectrum(g: EmbeddedGraph, tol: float = DEFAULT_SIGN_TOL) -> Spectrum:
    _budget_check(g.n)
    w, _ = symmetric_eigensystem(adjacency_matrix(g))
    return Spectrum(tuple(float(x) for x in w), tol)


def laplacian_spectrum(g: EmbeddedGraph, tol: float = DEFAULT_SIGN_TOL) -> Spectrum:
    _budget_check(g.n)
    w, _ = symmetric_eigensystem(laplacian_matrix(g))
    return Spectrum(tuple(float(x) for x in w), tol)


def smallest_eigenvalue(g: EmbeddedGraph) -> float:
    return adjacency_spectrum(g).smallest


def lambda_min_bound(n: int) -> float:
    """Upper bound -3 + 8 sqrt(3/(5n)) for the smallest adjacency
    eigenvalue of a fullerene on n vertices."""
    return -3.0 + 8.0 * math.sqrt(3.0 / (5.0 * n))


def maxcut_spectral_check(
    f: FullereneGraph, tr: Transversal, tol: float = 1e-6
) -> bool:
    """Largest-Laplacian-eigenvalue cut bound: the bipartition left by the
    transversal cuts at least 3n/2 - |J| edges, which must not exceed
    n mu_max / 4."""
    if not isinstance(f, FullereneGraph):
        raise SpectraError("max-cut check requires a validated fullerene")
    mu = laplacian_spectrum(f.base).largest
    return 1.5 * f.n - tr.value <= f.n * mu / 4.0 + tol


def closed_shell_check(
    g: EmbeddedGraph, independent: Iterable[int], tol: float = DEFAULT_SIGN_TOL
) -> bool | None:
    """Do exactly half the eigenvalues of g minus the set turn out positive?

    Returns True/False, or None (indeterminate) when the count would hinge
    on a near-zero eigenvalue.  An odd vertex-deleted order without zeros is
    definitively False: no count can be exactly half.
    """
    A = sorted(set(independent))
    aset = set(A)
    for v in A:
        if not 0 <= v < g.n:
            raise SpectraError(f"vertex {v} out of range")
        for u in g.rotation[v]:
            if u in aset:
                raise NotIndependentError(f"edge {u},{v} inside the set")
    keep = [v for v in range(g.n) if v not in aset]
    sub = adjacency_matrix(g)[np.ix_(keep, keep)]
    _budget_check(len(keep))
    w, _ = symmetric_eigensystem(sub)
    remainder = Spectrum(tuple(float(x) for x in w), tol)
    if remainder.zeros() > 0:
        return None
    if remainder.n % 2 == 1:
        return False
    return remainder.positives() == remainder.n // 2
