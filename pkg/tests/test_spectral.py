import math
import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from leastq.enumeration import h_family
from leastq.graph import Graph, complete, cycle, make_graph, path, theta_star
from leastq.spectral import (
    EIG_TOL, SpectralError, check_edge_deletion_monotone, check_min_degree_bound, full_spectrum, least_q,
    least_q_value, normalize_sign, odd_cycle_q, q_matrix, rayleigh, rayleigh_matrix, residual_bound, sine_vector,
    spectral_radius,
)
from oracles import random_connected_graph, random_graph


def sympy_spectrum(g: Graph) -> list[float]:
    m = sympy.Matrix(q_matrix(g).tolist())
    lam = sympy.symbols("lam")
    # exact real-root isolation keeps multiplicities
    return sorted(float(r.evalf(30)) for r in sympy.Poly(m.charpoly(lam).as_expr(), lam).real_roots())


def test_q_matrix():
    q = q_matrix(path(3))
    assert q.tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    assert q.dtype == np.int64


def test_small_closed_forms():
    assert least_q(cycle(3)).value == pytest.approx(1, abs=1e-9)
    assert least_q(complete(4)).value == pytest.approx(2, abs=1e-9)
    r5 = math.sqrt(5)
    assert full_spectrum(theta_star(4)) == pytest.approx([3 - r5, 2, 2, 3 + r5], abs=1e-9)


def test_theta4_characteristic_polynomial():
    lam = sympy.symbols("lam")
    poly = sympy.Matrix(q_matrix(theta_star(4)).tolist()).charpoly(lam).as_expr()
    assert sympy.expand(poly - (lam - 2) ** 2 * (lam ** 2 - 6 * lam + 4)) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graph(n):
    spec = full_spectrum(complete(n))
    assert spec == pytest.approx([n - 2] * (n - 1) + [2 * n - 2], abs=1e-9)


@pytest.mark.parametrize("n", range(3, 14))
def test_cycle_spectrum_is_circulant(n):
    ref = sorted(2 + 2 * math.cos(2 * math.pi * k / n) for k in range(n))
    assert full_spectrum(cycle(n)) == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_sine_vector_is_least_eigenvector(n):
    x = sine_vector(n)
    q = odd_cycle_q(n)
    assert q == pytest.approx(2 - 2 * math.cos(math.pi / n), abs=1e-15)
    assert np.max(np.abs(q_matrix(cycle(n)) @ x - q * x)) < 1e-12
    for h in h_family(n):
        # the chords join entries of equal size and opposite sign
        assert np.max(np.abs(q_matrix(h) @ x - q * x)) < 1e-12
        assert least_q(h).value == pytest.approx(q, abs=1e-9)


def test_against_sympy_on_random_graphs():
    rng = random.Random(3)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 6))
        assert full_spectrum(g) == pytest.approx(sympy_spectrum(g), abs=1e-9)


def test_eigenpair_certificate():
    g = theta_star(8)
    ep = least_q(g)
    assert ep.residual <= residual_bound(g)
    assert np.linalg.norm(ep.vector) == pytest.approx(1)
    first = next(v for v in ep.vector if abs(v) > 1e-9)
    assert first > 0
    rho = spectral_radius(g)
    assert rho.value == pytest.approx(max(full_spectrum(g)))
    assert np.all(rho.vector > 0)


def test_normalize_sign():
    y = normalize_sign(np.array([0.0, -1.0, 2.0]))
    assert y == pytest.approx(np.array([0.0, 1.0, -2.0]) / math.sqrt(5))


def test_disconnected_handling():
    g = make_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(SpectralError):
        least_q(g)
    with pytest.raises(SpectralError):
        full_spectrum(g)
    assert full_spectrum(g, require_connected=False) == pytest.approx([0, 0, 2, 2])
    assert least_q_value(g) == pytest.approx(0)
    assert least_q_value(make_graph(1, [])) == 0


def test_rayleigh_rejects_bad_vectors():
    with pytest.raises(SpectralError):
        rayleigh(cycle(3), [0, 0, 0])
    with pytest.raises(SpectralError):
        rayleigh(cycle(3), [1, 2])


def test_lemma_checks():
    c = check_min_degree_bound(cycle(5))
    assert c.holds and c.margin == pytest.approx(2 - odd_cycle_q(5))
    d = check_edge_deletion_monotone(complete(4), (0, 1))
    assert d.holds and d.margin == pytest.approx(2 - least_q_value(make_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])))
    # deleting from a triangle leaves a path with q = 0
    assert check_edge_deletion_monotone(cycle(3), (0, 1)).margin == pytest.approx(1)


@st.composite
def connected_graphs(draw, lo=2, hi=10):
    n = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_connected_graph(random.Random(seed), n)


@settings(max_examples=300, deadline=None)
@given(connected_graphs(), st.lists(st.floats(-10, 10, allow_nan=False), min_size=10, max_size=10))
def test_rayleigh_bounds_and_formula(g, raw):
    x = np.array(raw[:g.n])
    if np.linalg.norm(x) < 1e-3:
        x[0] = 1.0
    r = rayleigh(g, x)
    assert r == pytest.approx(rayleigh_matrix(g, x), rel=1e-10, abs=1e-10)
    spec = full_spectrum(g)
    assert spec[0] - 1e-9 <= r <= spec[-1] + 1e-9


@settings(max_examples=300, deadline=None)
@given(connected_graphs())
def test_trace_and_positivity(g):
    spec = full_spectrum(g)
    assert sum(spec) == pytest.approx(sum(g.degrees), abs=1e-9)
    assert sum(s * s for s in spec) == pytest.approx(sum(d * d + d for d in g.degrees), abs=1e-7)
    assert spec[0] >= -1e-10
    assert least_q(g).value == pytest.approx(spec[0], abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(connected_graphs(3, 9), st.randoms(use_true_random=False))
def test_permutation_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert full_spectrum(g.relabel(perm)) == pytest.approx(full_spectrum(g), abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2 ** 32 - 1))
def test_least_value_of_union_is_min_over_components(n, seed):
    g = random_graph(random.Random(seed), n, 0.3)
    full = np.linalg.eigvalsh(q_matrix(g).astype(float))[0]
    assert least_q_value(g) == pytest.approx(full, abs=1e-9)
    assert least_q_value(g) <= min(g.degrees) + EIG_TOL
