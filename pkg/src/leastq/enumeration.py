"""Isomorphism-class enumeration and desk-scale certification of the extremal theorems."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .canon import CanonicalForm, canonical_code, canonical_form
from .graph import Graph, GraphError, cycle, graph6_decode, graph6_encode, h_graph, theta_from_paths, theta_star
from .spectral import EIG_TOL, least_q_value, odd_cycle_q
from .topology import is_bipartite, is_connected, is_hamiltonian, is_two_connected

MIN_ORDER, MAX_ORDER, SLOW_ORDER = 3, 9, 9
UNLABELED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


class EnumerationError(ValueError):
    pass


# predicates --------------------------------------------------------------------

def is_theta(g: Graph) -> bool:
    """2-connected with n+1 edges, two vertices of degree 3 and the rest of degree 2."""
    if g.n < 4 or g.m != g.n + 1:
        return False
    degs = sorted(g.degrees)
    if degs != [2] * (g.n - 2) + [3, 3]:
        return False
    return is_two_connected(g)


def nonbipartite_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_two_connected(g) and not is_bipartite(g)


def nonbipartite_hamiltonian(g: Graph) -> bool:
    return is_connected(g) and not is_bipartite(g) and is_hamiltonian(g)


def nonbipartite_theta(g: Graph) -> bool:
    return is_theta(g) and not is_bipartite(g)


PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "connected": is_connected,
    "nonbipartite-2-connected": nonbipartite_two_connected,
    "nonbipartite-hamiltonian": nonbipartite_hamiltonian,
    "theta": is_theta,
    "nonbipartite-theta": nonbipartite_theta,
}


# generation --------------------------------------------------------------------

def _extend(args) -> set[int]:
    n, codes = args
    out = set()
    for code in codes:
        masks = list(CanonicalForm(n, code).graph().masks)
        for s in range(1 << n):
            child = [masks[v] | (s >> v & 1) << n for v in range(n)]
            child.append(s)
            out.add(canonical_code(n + 1, child)[0])
    return out


@lru_cache(maxsize=None)
def _classes(n: int, jobs: int = 1) -> tuple[int, ...]:
    codes = [0]
    for k in range(1, n):
        if jobs > 1 and len(codes) > 64:
            chunks = [codes[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(jobs) as pool:
                parts = pool.map(_extend, [(k, c) for c in chunks])
                merged: set[int] = set()
                for p in parts:
                    merged |= p
        else:
            merged = _extend((k, codes))
        codes = sorted(merged)
    return tuple(codes)


def enumerate_graphs(n: int, predicate: Callable[[Graph], bool] | str | None = None,
                     jobs: int = 1, allow_slow: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices, in code order.

    Classes are grown one vertex at a time from the classes on n-1 vertices
    (every graph is a smaller graph plus a vertex) and deduplicated by
    canonical code.
    """
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise EnumerationError(f"enumeration supports {MIN_ORDER} <= n <= {MAX_ORDER}, got {n}")
    if n >= SLOW_ORDER and not allow_slow:
        raise EnumerationError(f"n = {n} takes minutes; pass allow_slow to enable it")
    pred = PREDICATES[predicate] if isinstance(predicate, str) else predicate
    for code in _classes(n, jobs):
        g = CanonicalForm(n, code).graph()
        if pred is None or pred(g):
            yield g


def classes_from_graph6(lines: Iterable[str], predicate=None) -> Iterator[Graph]:
    """Deduplicated canonical representatives of externally supplied graph6 lines."""
    pred = PREDICATES[predicate] if isinstance(predicate, str) else predicate
    seen = set()
    for line in lines:
        line = line.strip()
        if not line:
            continue
        cf = canonical_form(graph6_decode(line))
        if cf in seen:
            continue
        seen.add(cf)
        g = cf.graph()
        if pred is None or pred(g):
            yield g


# extremal families -------------------------------------------------------------

def h_family(n: int) -> list[Graph]:
    top = (n - 3) // 2
    return [h_graph(n, list(s)) for k in range(1, top + 1) for s in combinations(range(1, top + 1), k)]


def odd_extremal_forms(n: int) -> set[CanonicalForm]:
    """C_n together with every H(i_1, ..., i_k)."""
    return {canonical_form(g) for g in [cycle(n), *h_family(n)]}


def theta_shapes_by_paths(n: int) -> list[tuple[int, int, int]]:
    """Interior-vertex counts a <= b <= c of the three hub-to-hub paths of every θ-graph on n vertices."""
    out = []
    for a in range(0, n - 1):
        for b in range(max(a, 1), n - 1):
            c = n - 2 - a - b
            if c >= b:
                out.append((a, b, c))
    return out


# reports -----------------------------------------------------------------------

@dataclass
class EnumerationReport:
    n: int
    parity: str
    family: str
    graph_count: int
    min_q: float
    expected_q: float
    argmin: list[str]
    expected: list[str]
    verdict: str
    tolerances: dict
    wall_clock: float
    classes_scanned: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SweepReport:
    """Outcome of checking one property over every member of a finite family."""

    name: str
    n: int
    count: int
    checked: int
    worst_margin: float | None
    failures: list[str]
    verdict: str
    tolerances: dict
    wall_clock: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def _sorted_g6(forms: Iterable[CanonicalForm]) -> list[str]:
    return [cf.graph6() for cf in sorted(forms)]


def _extremal_report(n, family, graphs, expected_forms, expected_q, tol, t0,
                     subset_ok: bool = False) -> EnumerationReport:
    qs = []
    for g in graphs:
        qs.append((least_q_value(g), canonical_form(g)))
    if not qs:
        raise EnumerationError(f"no graphs in family {family!r} at n={n}")
    min_q = min(q for q, _ in qs)
    argmin = {cf for q, cf in qs if q <= expected_q + tol}
    below = [cf for q, cf in qs if q < expected_q - tol]
    value_ok = abs(min_q - expected_q) <= tol
    sets_ok = argmin <= expected_forms if subset_ok else argmin == expected_forms
    bad = (argmin ^ expected_forms) if not subset_ok else (argmin - expected_forms)
    counter = _sorted_g6(set(below) | bad)
    return EnumerationReport(
        n=n,
        parity="odd" if n % 2 else "even",
        family=family,
        graph_count=len(qs),
        min_q=min_q,
        expected_q=expected_q,
        argmin=_sorted_g6(argmin),
        expected=_sorted_g6(expected_forms),
        verdict="pass" if value_ok and sets_ok and not below else "fail",
        tolerances={"value_abs": tol, "argmin_band_abs": tol},
        wall_clock=time.perf_counter() - t0,
        classes_scanned=len(qs),
        counterexamples=counter,
    )


def _family_graphs(n, predicate, graphs, jobs, allow_slow):
    if graphs is not None:
        return list(classes_from_graph6(graphs, predicate))
    return list(enumerate_graphs(n, predicate, jobs=jobs, allow_slow=allow_slow))


def verify_theorem_1(n: int, tol: float = EIG_TOL, jobs: int = 1, graphs: Iterable[str] | None = None,
                     allow_slow: bool = False) -> EnumerationReport:
    """Minimum q over nonbipartite 2-connected graphs: C_n / H family for odd n, Θ alone for even n."""
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise EnumerationError(f"t1 supports {MIN_ORDER} <= n <= {MAX_ORDER}, got {n}")
    t0 = time.perf_counter()
    family = _family_graphs(n, "nonbipartite-2-connected", graphs, jobs, allow_slow)
    if n % 2:
        expected, value = odd_extremal_forms(n) if n >= 5 else {canonical_form(cycle(n))}, odd_cycle_q(n)
    else:
        star = theta_star(n)
        expected, value = {canonical_form(star)}, least_q_value(star)
    return _extremal_report(n, "nonbipartite-2-connected", family, expected, value, tol, t0)


def verify_theorem_2(n: int, tol: float = EIG_TOL) -> EnumerationReport:
    """Minimum q over nonbipartite θ-graphs by sweeping the three path lengths."""
    if not 4 <= n <= 12:
        raise EnumerationError(f"t2 supports 4 <= n <= 12, got {n}")
    t0 = time.perf_counter()
    family = [g for g in (theta_from_paths(*abc) for abc in theta_shapes_by_paths(n)) if not is_bipartite(g)]
    if n % 2:
        top = (n - 3) // 2
        expected = {canonical_form(h_graph(n, [i])) for i in range(1, top + 1)}
        value = odd_cycle_q(n)
    else:
        star = theta_star(n)
        expected, value = {canonical_form(star)}, least_q_value(star)
    return _extremal_report(n, "nonbipartite-theta", family, expected, value, tol, t0)


def hamiltonian_floor_check(n: int, tol: float = EIG_TOL) -> EnumerationReport:
    """Nonbipartite Hamiltonian graphs of odd order: min q is q(C_n), attained only in the C_n / H family."""
    if n not in (5, 7):
        raise EnumerationError(f"hamiltonian floor check runs at n in {{5, 7}}, got {n}")
    t0 = time.perf_counter()
    family = list(enumerate_graphs(n, "nonbipartite-hamiltonian"))
    return _extremal_report(n, "nonbipartite-hamiltonian", family, odd_extremal_forms(n), odd_cycle_q(n), tol, t0,
                            subset_ok=True)


def sweep_min_degree_bound(graphs: Iterable[Graph], n: int) -> SweepReport:
    """q < minimum degree over connected graphs."""
    t0 = time.perf_counter()
    worst, fails, count = None, [], 0
    for g in graphs:
        if not is_connected(g):
            continue
        count += 1
        margin = min(g.degrees) - least_q_value(g)
        worst = margin if worst is None else min(worst, margin)
        if not margin > 0:
            fails.append(graph6_encode(g))
    return SweepReport("lemma-q-delta", n, count, count, worst, fails, "pass" if not fails else "fail",
                       {"strict": 0.0}, time.perf_counter() - t0)


def sweep_edge_monotone(graphs: Iterable[Graph], n: int, tol: float = EIG_TOL) -> SweepReport:
    """q(G - e) <= q(G) + tol for every edge of every connected graph."""
    t0 = time.perf_counter()
    worst, fails, count, checked = None, [], 0, 0
    for g in graphs:
        if not is_connected(g):
            continue
        count += 1
        qg = least_q_value(g)
        for e in g.sorted_edges():
            checked += 1
            qe = least_q_value(Graph(g.n, g.edges - {e}))
            margin = qg - qe
            worst = margin if worst is None else min(worst, margin)
            if qe > qg + tol:
                fails.append(f"{graph6_encode(g)} {e[0]},{e[1]}")
    return SweepReport("lemma-edge-monotone", n, count, checked, worst, fails, "pass" if not fails else "fail",
                       {"monotone_abs": tol}, time.perf_counter() - t0)


def sweep_bipartite_kernel(graphs: Iterable[Graph], n: int, tol: float = 1e-10) -> SweepReport:
    """q = 0 exactly for the bipartite connected graphs."""
    t0 = time.perf_counter()
    fails, count = [], 0
    for g in graphs:
        if not is_connected(g):
            continue
        count += 1
        zero = abs(least_q_value(g)) <= tol
        if zero != is_bipartite(g):
            fails.append(graph6_encode(g))
    return SweepReport("q-zero-iff-bipartite", n, count, count, None, fails, "pass" if not fails else "fail",
                       {"zero_abs": tol}, time.perf_counter() - t0)


def connected_classes(n: int) -> list[Graph]:
    """All connected isomorphism classes, including the tiny orders below the enumerator's range."""
    if n == 1:
        return [Graph(1)]
    if n == 2:
        return [Graph(2, frozenset({(0, 1)}))]
    return list(enumerate_graphs(n, "connected", allow_slow=True))


def check_counts(max_n: int = 8) -> dict[int, tuple[int, int]]:
    """Enumerated class totals against the published unlabeled-graph counts."""
    out = {}
    for n in range(MIN_ORDER, max_n + 1):
        got = sum(1 for _ in enumerate_graphs(n, allow_slow=True))
        out[n] = (got, UNLABELED_COUNTS[n])
    return out


__all__ = [
    "EnumerationError", "EnumerationReport", "SweepReport", "PREDICATES", "UNLABELED_COUNTS",
    "enumerate_graphs", "classes_from_graph6", "is_theta", "h_family", "odd_extremal_forms",
    "theta_shapes_by_paths", "verify_theorem_1", "verify_theorem_2", "hamiltonian_floor_check",
    "sweep_min_degree_bound", "sweep_edge_monotone", "sweep_bipartite_kernel", "connected_classes",
    "check_counts", "GraphError",
]
