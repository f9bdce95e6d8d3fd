"""Least-eigenvector structure of Θ(j, k) and the rewiring moves that lower q.

A Θ(j, k) has a reflection fixing v_0 that swaps v_j and v_k and reverses the
two cycle arcs between them. Its least eigenspace either contains a nonzero
vector odd under that reflection ("symmetric-case": the vanishing-centre
profile) or it does not ("asymmetric-case"), in which case the eigenvector is
even under the reflection, nowhere zero, alternates in sign except across the
middle edge of the even arc, and its magnitudes grow toward the middle of the
odd arc.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .canon import canonical_form
from .graph import Graph, GraphError, ThetaShape, cycle, theta_graph, theta_star
from .spectral import EIG_TOL, SpectralError, least_q, least_q_value, normalize_sign, q_matrix, rayleigh, residual_bound
from .topology import VertexPath, bipartite_or_odd_cycle, TwoColoring, is_two_connected

SYMMETRIC = "symmetric-case"
ASYMMETRIC = "asymmetric-case"

EIGENSPACE_TOL = 1e-7
LSTSQ_TOL = 1e-8
ZERO_TOL = 1e-8
NONZERO_TOL = 1e-6
STRICT_TOL = 1e-9


class EigenstructureError(ValueError):
    pass


@dataclass
class EigvecProfile:
    shape: ThetaShape
    case: str
    assertions: dict[str, bool]
    witness: np.ndarray
    q: float
    eigenspace_dim: int
    flagged: bool = False

    @property
    def passed(self) -> bool:
        return all(self.assertions.values())

    def failed(self) -> list[str]:
        return [k for k, ok in self.assertions.items() if not ok]


@dataclass
class RewireResult:
    source: Graph
    target: Graph
    vector: np.ndarray
    rayleigh_before: float
    rayleigh_after: float
    q_before: float
    q_after: float
    target_family: str
    target_matches: bool
    details: dict = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.q_before - self.q_after

    def strict(self, tol: float = STRICT_TOL) -> bool:
        return self.target_matches and self.rayleigh_after <= self.q_before + EIG_TOL and self.margin >= tol


# eigenspace helpers --------------------------------------------------------------

def least_eigenspace(g: Graph, tol: float = EIGENSPACE_TOL) -> tuple[float, np.ndarray]:
    vals, vecs = np.linalg.eigh(q_matrix(g).astype(float))
    d = int(np.sum(vals - vals[0] < tol))
    return float(vals[0]), vecs[:, :d]


def _reflect(shape: ThetaShape, x: np.ndarray) -> np.ndarray:
    return x[shape.reflection()]


def symmetrize_eigenvector(shape: ThetaShape, x) -> np.ndarray | None:
    """X plus its reflected negation; ``None`` when that sum vanishes.

    The result is again a least eigenvector and is zero at v_0.
    """
    g = theta_graph(shape)
    x = np.asarray(x, dtype=float)
    q = least_q_value(g)
    scale = np.linalg.norm(x)
    if scale == 0:
        raise EigenstructureError("zero vector")
    res = float(np.max(np.abs(q_matrix(g) @ x - q * x))) / scale
    if res > max(residual_bound(g), 1e-8):
        raise EigenstructureError(f"not a least eigenvector (residual {res:.2e})")
    y = x - _reflect(shape, x)
    if np.linalg.norm(y) <= 1e-9 * scale:
        return None
    return y


def _mirror_pairs(arc: list[int]) -> list[tuple[int, int]]:
    return [(arc[i], arc[-1 - i]) for i in range(len(arc) // 2)]


def _vanishing_centre_checks(shape: ThetaShape, y: np.ndarray) -> dict[str, bool]:
    odd = shape.odd_arc
    h = len(odd) // 2
    out = {
        "y(v0)=0": abs(y[0]) <= ZERO_TOL,
        "odd-arc middle zero": abs(y[odd[h]]) <= ZERO_TOL,
        "odd-arc middle predecessor nonzero": abs(y[odd[h - 1]]) > NONZERO_TOL,
        "P1 antisymmetric": all(abs(y[a] + y[b]) <= ZERO_TOL for a, b in _mirror_pairs(shape.p1)),
        "P2 antisymmetric": all(abs(y[a] + y[b]) <= ZERO_TOL for a, b in _mirror_pairs(shape.p2)),
    }
    return out


def _alternating_profile_checks(shape: ThetaShape, w: np.ndarray, g: Graph) -> dict[str, bool]:
    odd, even = shape.odd_arc, shape.even_arc
    h = len(odd) // 2
    t = len(even) // 2 - 1
    mid_edge = tuple(sorted((even[t], even[t + 1])))
    a = np.abs(w)
    s = STRICT_TOL
    out = {
        "(1) odd-arc mirror symmetric": all(abs(w[p] - w[q]) <= ZERO_TOL for p, q in _mirror_pairs(odd)),
        "(2) even-arc mirror symmetric": all(abs(w[p] - w[q]) <= ZERO_TOL for p, q in _mirror_pairs(even)),
        "(3) nowhere zero": bool(np.all(a > NONZERO_TOL)),
        "(4) sign alternates off the middle even-arc edge": all(
            w[u] * w[v] < 0 for u, v in g.sorted_edges() if (u, v) != mid_edge),
        "(5) magnitudes grow toward odd-arc middle": all(a[odd[i]] > a[odd[i - 1]] + s for i in range(1, h + 1)),
        "(6) |w(v0)| > |w(vj)|": a[0] > a[shape.j] + s,
        "(7) |w(vj)| > |w(eta1)|": t < 1 or a[shape.j] > a[even[1]] + s,
        "(8) magnitudes decay toward even-arc middle": t < 2 or all(
            a[even[i - 1]] > a[even[i]] + s for i in range(2, t + 1)),
    }
    return out


def classify_theta_eigenvector(shape: ThetaShape) -> EigvecProfile:
    """Decide which eigenvector profile the least eigenspace of Θ(j, k) carries and check it."""
    g = theta_graph(shape)
    q, basis = least_eigenspace(g)
    d = basis.shape[1]
    n = shape.n
    sigma = shape.reflection()
    # rows of (I + P_sigma) vanish exactly on reflection-odd vectors
    constraint = np.eye(n) + np.eye(n)[sigma]
    sv = np.linalg.svd(constraint @ basis, compute_uv=True)
    _, svals, vt = sv
    smallest = svals[-1] if len(svals) == d else 0.0
    flagged = d > 2
    if smallest < LSTSQ_TOL:
        # witness from the reflection-negation sum applied to the eigenbasis
        cands = [symmetrize_eigenvector(shape, basis[:, i]) for i in range(d)]
        cands = [c for c in cands if c is not None]
        y = normalize_sign(max(cands, key=np.linalg.norm))
        checks = _vanishing_centre_checks(shape, y)
        lstsq_witness = basis @ vt[-1]
        checks["least-squares witness is reflection-odd"] = bool(
            np.max(np.abs(lstsq_witness + lstsq_witness[sigma])) < 1e-7)
        return EigvecProfile(shape, SYMMETRIC, checks, y, q, d, flagged)
    w = normalize_sign(basis[:, 0])
    checks = _alternating_profile_checks(shape, w, g)
    checks["least eigenvalue simple"] = d == 1
    return EigvecProfile(shape, ASYMMETRIC, checks, w, q, d, flagged)


def all_theta_shapes(n: int) -> list[ThetaShape]:
    return [ThetaShape(n, j, k) for j in range(1, n - 1) for k in range(j + 1, n)]


@dataclass
class Dominance:
    shape: ThetaShape
    q_star: float
    q_shape: float
    isomorphic: bool
    holds: bool

    @property
    def margin(self) -> float:
        return self.q_shape - self.q_star


def verify_theta_dominance(shape: ThetaShape, tol: float = EIG_TOL) -> Dominance:
    """q(Θ) <= q(Θ(j, k)); equal only when Θ(j, k) is isomorphic to Θ, otherwise strictly larger."""
    star = theta_star(shape.n)
    g = theta_graph(shape)
    q_star, q_shape = least_q_value(star), least_q_value(g)
    iso = canonical_form(g) == canonical_form(star)
    if iso:
        holds = abs(q_shape - q_star) <= tol
    else:
        holds = q_shape - q_star > STRICT_TOL
    holds = holds and iso == shape.is_star()
    return Dominance(shape, q_star, q_shape, iso, holds)


# rewiring ----------------------------------------------------------------------

def _check_eigvec(g: Graph, x) -> tuple[np.ndarray, float, int]:
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise EigenstructureError("vector length does not match the graph order")
    q = least_q_value(g)
    nx = np.linalg.norm(x)
    if nx == 0 or np.max(np.abs(q_matrix(g) @ x - q * x)) > max(residual_bound(g), 1e-8) * nx:
        raise EigenstructureError("vector is not a least eigenvector")
    mu = int(np.argmax(np.abs(x)))
    return x, q, mu


def _check_host(g: Graph, cyc) -> VertexPath:
    if g.n < 3 or not is_two_connected(g):
        raise EigenstructureError("graph is not 2-connected")
    if isinstance(bipartite_or_odd_cycle(g), TwoColoring):
        raise EigenstructureError("graph is bipartite")
    c = cyc if isinstance(cyc, VertexPath) else VertexPath(tuple(cyc), closed=True)
    c = VertexPath(c.vertices, closed=True)
    if not c.is_valid_in(g):
        raise EigenstructureError(f"{list(c.vertices)} is not a cycle of the graph")
    if c.length % 2 == 0:
        raise EigenstructureError("cycle must be odd")
    return c


def _rotate_to(c: VertexPath, mu: int) -> list[int]:
    vs = list(c.vertices)
    if mu not in vs:
        raise EigenstructureError(f"max-|x| vertex {mu} is not on the cycle")
    i = vs.index(mu)
    return vs[i:] + vs[:i]


def _edges_of_cycle(vs: list[int]) -> set[tuple[int, int]]:
    return {tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))}


def rewire_cycle_absorb(g: Graph, cyc, x) -> RewireResult:
    """Thread every vertex off an odd cycle through v_mu into it, giving a Hamiltonian odd cycle.

    The outside vertices get the alternating values -x_mu, +x_mu, ...; the
    Rayleigh quotient of the new cycle at that vector does not exceed q(G).
    """
    if g.n % 2 == 0:
        raise EigenstructureError("cycle absorption needs odd order")
    c = _check_host(g, cyc)
    x, q, mu = _check_eigvec(g, x)
    vs = _rotate_to(c, mu)
    if len(vs) == g.n:
        raise EigenstructureError("cycle already spans the graph; nothing to absorb")
    outside = sorted(set(range(g.n)) - set(vs))
    nb = vs[1]
    edges = _edges_of_cycle(vs) - {tuple(sorted((mu, nb)))}
    chain = [mu, *outside, nb]
    edges |= {tuple(sorted(p)) for p in zip(chain, chain[1:])}
    target = Graph(g.n, frozenset(edges))
    y = x.copy()
    for t, v in enumerate(outside, start=1):
        y[v] = (-1) ** t * x[mu]
    ok = canonical_form(target) == canonical_form(cycle(g.n))
    return RewireResult(g, target, y, rayleigh(g, x), rayleigh(target, y), q, least_q_value(target),
                        "cycle", ok, {"mu": mu, "cycle": vs, "outside": outside})


def rewire_theta_absorb(g: Graph, cyc, x) -> RewireResult:
    """Even order, at least three vertices off the odd cycle through v_mu: rebuild the graph as Θ.

    With outside vertices i_1 < ... < i_k (k odd), the cycle edge v_mu v_j1 is
    replaced by the path v_mu i_1 ... i_{k-1} v_j1, and i_k is hung on v_mu and
    i_2, making i_k a twin of i_1.
    """
    if g.n % 2:
        raise EigenstructureError("theta absorption needs even order")
    c = _check_host(g, cyc)
    x, q, mu = _check_eigvec(g, x)
    vs = _rotate_to(c, mu)
    k = g.n - len(vs)
    if k < 3:
        raise EigenstructureError(
            f"n - L(C) = {k} < 3: the cycle misses a single vertex; use the spanning-odd-cycle "
            "(Θ(j, k) dominance) route instead")
    outside = sorted(set(range(g.n)) - set(vs))
    j1 = vs[1]
    edges = _edges_of_cycle(vs) - {tuple(sorted((mu, j1)))}
    p1 = [mu, *outside[:-1], j1]
    p2 = [mu, outside[-1], outside[1]]
    for p in (p1, p2):
        edges |= {tuple(sorted(e)) for e in zip(p, p[1:])}
    target = Graph(g.n, frozenset(edges))
    y = x.copy()
    for t, v in enumerate(outside, start=1):
        y[v] = (-1) ** t * x[mu]
    ok = canonical_form(target) == canonical_form(theta_star(g.n))
    return RewireResult(g, target, y, rayleigh(g, x), rayleigh(target, y), q, least_q_value(target),
                        "theta", ok, {"mu": mu, "cycle": vs, "outside": outside, "p1": p1, "p2": p2})


def rewire_theta_recenter(shape: ThetaShape) -> RewireResult:
    """Move v_0 onto the two neighbours of the odd-arc middle, which yields Θ.

    Asymmetric-case: v_0's value is pushed past the middle neighbour's by the
    original gap |w(v_0)| - |w(v_j)|, keeping the edge energy and raising the
    norm. Symmetric-case with |y(middle predecessor)| <= |y(v_j)|: the
    vanishing-centre vector is reused unchanged. The remaining symmetric
    configuration is not a single edge move and is rejected.
    """
    if shape.is_star():
        raise EigenstructureError("shape is already Θ")
    prof = classify_theta_eigenvector(shape)
    g = theta_graph(shape)
    odd = shape.odd_arc
    h = len(odd) // 2
    left, right = odd[h - 1], odd[h + 1]
    edges = set(g.edges) - {(0, shape.j), (0, shape.k)} | {tuple(sorted((0, left))), tuple(sorted((0, right)))}
    target = Graph(g.n, frozenset(edges))
    w = prof.witness.copy()
    if prof.case == ASYMMETRIC:
        alpha = abs(w[0]) - abs(w[shape.j])
        f = w.copy()
        f[0] = -np.sign(w[left]) * (abs(w[left]) + alpha)
    elif abs(w[left]) <= abs(w[shape.j]) + ZERO_TOL:
        f = w
    else:
        raise EigenstructureError("symmetric-case with a heavy middle predecessor needs the multi-edge rewiring")
    ok = canonical_form(target) == canonical_form(theta_star(shape.n))
    return RewireResult(g, target, f, rayleigh(g, w), rayleigh(target, f), prof.q, least_q_value(target),
                        "theta", ok, {"case": prof.case})


def rewire_for(g: Graph) -> RewireResult | None:
    """Apply the absorption move the graph calls for, or ``None`` when its odd cycle through v_mu is long enough that no move applies."""
    from .topology import odd_cycle_through

    ep = least_q(g)
    mu = int(np.argmax(np.abs(ep.vector)))
    c = odd_cycle_through(g, mu)
    if g.n % 2:
        if c.length == g.n:
            return None
        return rewire_cycle_absorb(g, c, ep.vector)
    if g.n - c.length < 3:
        return None
    return rewire_theta_absorb(g, c, ep.vector)


__all__ = [
    "SYMMETRIC", "ASYMMETRIC", "EigvecProfile", "RewireResult", "Dominance", "EigenstructureError",
    "classify_theta_eigenvector", "symmetrize_eigenvector", "verify_theta_dominance", "all_theta_shapes",
    "rewire_cycle_absorb", "rewire_theta_absorb", "rewire_theta_recenter", "rewire_for", "least_eigenspace",
    "GraphError", "SpectralError",
]
