"""Signless Laplacian Q = D + A, Rayleigh quotients and certified eigenpairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph, GraphError, remove_edge
from .topology import is_connected

EIG_TOL = 1e-9
RESIDUAL_SCALE = 1e-10


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray
    residual: float

    def __iter__(self):
        return iter((self.value, self.vector))


class Check(NamedTuple):
    holds: bool
    margin: float


def q_matrix(g: Graph) -> np.ndarray:
    """Integer matrix with degrees on the diagonal and 1 for each edge."""
    q = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        q[u, v] = q[v, u] = 1
        q[u, u] += 1
        q[v, v] += 1
    return q


def rayleigh(g: Graph, x) -> float:
    """Sum of (x_u + x_v)^2 over edges divided by the squared norm of x."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise SpectralError(f"vector length {x.shape} does not match order {g.n}")
    den = float(x @ x)
    if den == 0.0:
        raise SpectralError("zero vector")
    num = sum((x[u] + x[v]) ** 2 for u, v in g.edges)
    return float(num) / den


def rayleigh_matrix(g: Graph, x) -> float:
    x = np.asarray(x, dtype=float)
    return float(x @ q_matrix(g) @ x) / float(x @ x)


def normalize_sign(x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Unit norm, first entry with magnitude above ``tol`` made positive."""
    x = x / np.linalg.norm(x)
    for xi in x:
        if abs(xi) > tol:
            return x if xi > 0 else -x
    return x


def residual_bound(g: Graph) -> float:
    return RESIDUAL_SCALE * (1 + 2 * max(g.degrees))


def _require_connected(g: Graph):
    if not is_connected(g):
        raise SpectralError("graph is disconnected; decompose it first")


def _certify(g: Graph, q: np.ndarray, lam: float, x: np.ndarray) -> EigenPair:
    x = normalize_sign(x)
    res = float(np.max(np.abs(q @ x - lam * x)))
    if res > residual_bound(g):
        raise SpectralError(f"eigenpair residual {res:.3e} exceeds {residual_bound(g):.3e}")
    return EigenPair(float(lam), x, res)


def eigh(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """All eigenvalues ascending with orthonormal eigenvectors as columns."""
    return np.linalg.eigh(q_matrix(g).astype(float))


def full_spectrum(g: Graph, require_connected: bool = True) -> list[float]:
    if require_connected:
        _require_connected(g)
    vals = np.linalg.eigvalsh(q_matrix(g).astype(float))
    if vals[0] < -1e-10:
        raise SpectralError(f"negative eigenvalue {vals[0]} for a PSD matrix")
    return [float(v) for v in vals]


def least_q_value(g: Graph) -> float:
    """q(G) without the eigenvector; accepts disconnected graphs (global minimum over components)."""
    if g.n == 1:
        return 0.0
    return float(np.linalg.eigvalsh(q_matrix(g).astype(float))[0])


def least_q(g: Graph) -> EigenPair:
    _require_connected(g)
    q = q_matrix(g).astype(float)
    vals, vecs = np.linalg.eigh(q)
    return _certify(g, q, vals[0], vecs[:, 0])


def spectral_radius(g: Graph) -> EigenPair:
    _require_connected(g)
    q = q_matrix(g).astype(float)
    vals, vecs = np.linalg.eigh(q)
    return _certify(g, q, vals[-1], vecs[:, -1])


def sine_vector(n: int) -> np.ndarray:
    """x_j = -(-1)^j sin(pi j / n): a least eigenvector of the odd cycle C_n."""
    j = np.arange(n)
    return -((-1.0) ** j) * np.sin(np.pi * j / n)


def odd_cycle_q(n: int) -> float:
    return 2.0 - 2.0 * np.cos(np.pi / n)


def check_min_degree_bound(g: Graph) -> Check:
    """q(G) < minimum degree; margin is delta - q."""
    _require_connected(g)
    delta = min(g.degrees)
    margin = delta - least_q(g).value
    return Check(margin > 0, margin)


def check_edge_deletion_monotone(g: Graph, e: tuple[int, int], tol: float = EIG_TOL) -> Check:
    """q(G - e) <= q(G); margin is q(G) - q(G - e).

    G - e may be disconnected, in which case its least eigenvalue is the
    minimum over components, i.e. the minimum of the whole spectrum.
    """
    _require_connected(g)
    if not g.has_edge(*e):
        raise GraphError(f"edge {tuple(e)} not present")
    before = least_q(g).value
    after = least_q_value(remove_edge(g, *e))
    return Check(after <= before + tol, before - after)
