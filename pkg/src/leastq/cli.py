"""Command-line interface: construct, spectrum, verify, paths.

Exit codes: 0 pass, 1 a mathematical assertion failed, 2 usage error,
3 input-contract error (e.g. a disconnected graph where connectivity is needed).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

import numpy as np

from .graph import (Graph, Graph6Error, GraphError, ThetaShape, complete, cycle, graph6_decode, graph6_encode,
                    h_graph, path, theta_graph, theta_star)
from .enumeration import EnumerationError
from .spectral import EIG_TOL, SpectralError, full_spectrum, least_q
from .topology import (TopologyError, is_connected, odd_cycle_through, two_paths_to_cycle, two_paths_to_edge)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2, 3

RANGES = {
    "t1": (3, 8),
    "t2": (4, 12),
    "lemma-q-delta": (2, 8),
    "lemma-edge-monotone": (2, 8),
    "hamiltonian-floor": (5, 7),
    "theta-dominance": (4, 14),
    "eigvec-structure": (4, 14),
}


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.7f}"


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}")


def build_family(name: str, params: Sequence[int]) -> Graph:
    """Construct a named family member; raises UsageError on bad parameters."""
    try:
        if name == "cycle" and len(params) == 1:
            return cycle(params[0])
        if name == "h" and len(params) >= 2:
            return h_graph(params[0], params[1:])
        if name == "theta" and len(params) == 3:
            return theta_graph(ThetaShape(*params))
        if name == "theta-star" and len(params) == 1:
            return theta_star(params[0])
        if name == "complete" and len(params) == 1:
            return complete(params[0])
        if name == "path" and len(params) == 1:
            return path(params[0])
    except GraphError as exc:
        raise UsageError(str(exc))
    raise UsageError(f"unknown family or wrong parameter count: {name} {list(params)}")


def parse_family(spec: str) -> Graph:
    """``name:p1:p2`` with comma lists allowed, e.g. ``cycle:5``, ``h:7:1,2``, ``theta:6:2:5``."""
    name, _, rest = spec.partition(":")
    return build_family(name, _ints(rest.replace(":", " ")))


def _report(command, inputs, outputs, verdicts, tolerances, t0) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "verdicts": verdicts,
        "tolerances": tolerances,
        "timing": {"wall_clock_s": time.perf_counter() - t0},
    }


def _emit(obj):
    print(json.dumps(obj, indent=2, default=_jsonable))


def _jsonable(o):
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.bool_):
        return bool(o)
    raise TypeError(type(o).__name__)


# commands ----------------------------------------------------------------------

def cmd_construct(args) -> int:
    g = build_family(args.family, _ints(" ".join(args.params)))
    print(graph6_encode(g))
    return EXIT_PASS


def _input_graphs(args) -> list[tuple[str, Graph]]:
    if args.family:
        g = parse_family(args.family)
        return [(graph6_encode(g), g)]
    lines = [args.graph6] if args.graph6 else [ln for ln in sys.stdin.read().split() if ln]
    if not lines:
        raise UsageError("no input graph")
    return [(ln, graph6_decode(ln)) for ln in lines]


def cmd_spectrum(args) -> int:
    t0 = time.perf_counter()
    graphs = _input_graphs(args)
    results = []
    for text, g in graphs:
        if not is_connected(g):
            print(f"{text}: graph is disconnected", file=sys.stderr)
            return EXIT_CONTRACT
        ep = least_q(g)
        item = {"graph6": graph6_encode(g), "n": g.n, "m": g.m, "least_q": ep.value, "residual": ep.residual}
        if args.vector:
            item["vector"] = ep.vector.tolist()
        if args.full:
            item["spectrum"] = full_spectrum(g)
        results.append(item)
    if args.json:
        _emit(_report("spectrum", {"graphs": [t for t, _ in graphs], "full": args.full, "vector": args.vector},
                      {"results": results}, {}, {"residual_inf": 1e-10, "eigenvalue_abs": EIG_TOL}, t0))
        return EXIT_PASS
    for item in results:
        if args.full:
            print(", ".join(_fmt(v) for v in item["spectrum"]))
        else:
            print(_fmt(item["least_q"]))
        if args.vector:
            print(" ".join(_fmt(v) for v in item["vector"]))
    return EXIT_PASS


def run_verification(theorem: str, n: int, tol: float = EIG_TOL, jobs: int = 1, graphs=None,
                     allow_slow: bool = False) -> dict:
    """Run one named check and return its report as a plain dict with a ``verdict`` key."""
    from . import eigenstructure as es
    from . import enumeration as en

    if theorem == "t1":
        return en.verify_theorem_1(n, tol=tol, jobs=jobs, graphs=graphs, allow_slow=allow_slow).to_dict()
    if theorem == "t2":
        return en.verify_theorem_2(n, tol=tol).to_dict()
    if theorem == "hamiltonian-floor":
        return en.hamiltonian_floor_check(n, tol=tol).to_dict()
    if theorem in ("lemma-q-delta", "lemma-edge-monotone"):
        if graphs is not None:
            family = list(en.classes_from_graph6(graphs, "connected"))
        else:
            family = en.connected_classes(n)
        if theorem == "lemma-q-delta":
            return en.sweep_min_degree_bound(family, n).to_dict()
        return en.sweep_edge_monotone(family, n, tol=tol).to_dict()
    t0 = time.perf_counter()
    shapes = es.all_theta_shapes(n)
    fails, worst, details = [], None, {}
    if theorem == "theta-dominance":
        for s in shapes:
            d = es.verify_theta_dominance(s, tol=tol)
            if not d.isomorphic:
                worst = d.margin if worst is None else min(worst, d.margin)
            if not d.holds:
                fails.append(graph6_encode(theta_graph(s)))
        details["q_theta_star"] = es.least_q_value(theta_star(n))
        tols = {"equality_abs": tol, "strict_margin": es.STRICT_TOL}
    else:
        cases = {es.SYMMETRIC: 0, es.ASYMMETRIC: 0}
        for s in shapes:
            prof = es.classify_theta_eigenvector(s)
            cases[prof.case] += 1
            star_ok = (s.j, s.k) != (2, n - 1) or prof.case == es.ASYMMETRIC
            if not (prof.passed and star_ok) or prof.flagged:
                fails.append(graph6_encode(theta_graph(s)))
        details["cases"] = cases
        tols = {"eigenspace": es.EIGENSPACE_TOL, "lstsq": es.LSTSQ_TOL, "zero": es.ZERO_TOL,
                "nonzero": es.NONZERO_TOL, "strict": es.STRICT_TOL}
    return en.SweepReport(theorem, n, len(shapes), len(shapes), worst, fails, "fail" if fails else "pass",
                          tols, time.perf_counter() - t0, details).to_dict()


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    lo, hi = RANGES[args.theorem]
    if args.theorem == "t1" and args.allow_slow:
        hi = 9
    if not lo <= args.n <= hi:
        raise UsageError(f"{args.theorem} supports {lo} <= n <= {hi}, got {args.n}")
    if args.theorem in ("theta-dominance", "eigvec-structure") and args.n % 2:
        raise UsageError(f"{args.theorem} needs even n")
    if args.theorem == "hamiltonian-floor" and args.n not in (5, 7):
        raise UsageError("hamiltonian-floor runs at n = 5 or 7")
    graphs = None
    if args.graphs:
        if args.theorem not in ("t1", "lemma-q-delta", "lemma-edge-monotone"):
            raise UsageError(f"--graphs is not supported for {args.theorem}")
        with (sys.stdin if args.graphs == "-" else open(args.graphs)) as fh:
            graphs = fh.read().split()
    rep = run_verification(args.theorem, args.n, tol=args.tol, jobs=args.jobs, graphs=graphs,
                           allow_slow=args.allow_slow)
    verdict = rep["verdict"]
    _emit(_report("verify", {"theorem": args.theorem, "n": args.n, "tol": args.tol, "jobs": args.jobs,
                             "graphs": args.graphs},
                  rep, {"overall": verdict}, rep["tolerances"], t0))
    _summary(args.theorem, rep)
    return EXIT_PASS if verdict == "pass" else EXIT_FAIL


def _summary(theorem: str, rep: dict):
    err = sys.stderr
    print(f"{'check':<22}{'n':>4}  {'count':>7}  {'verdict':<7}", file=err)
    print(f"{theorem:<22}{rep['n']:>4}  {rep.get('graph_count', rep.get('count')):>7}  {rep['verdict']:<7}", file=err)
    if "min_q" in rep:
        print(f"  min q      {_fmt(rep['min_q'])}", file=err)
        print(f"  expected q {_fmt(rep['expected_q'])}", file=err)
        for g6 in rep["argmin"]:
            print(f"  argmin {g6}", file=err)
    bad = rep.get("counterexamples") or rep.get("failures") or []
    for g6 in bad:
        print(f"  counterexample {g6}", file=err)


def cmd_paths(args) -> int:
    g = graph6_decode(args.graph6)
    try:
        if args.kind == "odd-cycle-through":
            if args.v is None:
                raise UsageError("--v is required")
            c = odd_cycle_through(g, args.v)
            if not (c.is_valid_in(g) and c.length % 2 and args.v in c):
                print("internal check failed: not an odd cycle through the vertex", file=sys.stderr)
                return EXIT_FAIL
            print(" ".join(map(str, c.vertices)))
            return EXIT_PASS
        if args.cycle is None or args.xi is None:
            raise UsageError("--cycle and --xi are required")
        cyc = _ints(args.cycle)
        if args.kind == "to-edge":
            if args.edge is None:
                raise UsageError("--edge is required")
            e = _ints(args.edge)
            if len(e) != 2:
                raise UsageError("--edge takes two vertices")
            pair = two_paths_to_edge(g, cyc, (e[0], e[1]), args.xi)
        else:
            pair = two_paths_to_cycle(g, cyc, args.xi)
    except TopologyError as exc:
        raise UsageError(str(exc))
    if not (pair.is_disjoint() and pair.p1.is_valid_in(g) and pair.p2.is_valid_in(g)):
        print("internal check failed: paths are not disjoint", file=sys.stderr)
        return EXIT_FAIL
    print(" ".join(map(str, pair.p1.vertices)))
    print(" ".join(map(str, pair.p2.vertices)))
    return EXIT_PASS


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leastq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="print graph6 of a named family member")
    c.add_argument("family", choices=["cycle", "h", "theta", "theta-star", "complete", "path"])
    c.add_argument("params", nargs="+")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("spectrum", help="least / full signless Laplacian spectrum")
    s.add_argument("graph6", nargs="?")
    s.add_argument("--family", help="inline family spec such as cycle:5 or theta:6:2:5")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--least", action="store_true")
    mode.add_argument("--full", action="store_true")
    s.add_argument("--vector", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", help="certify a theorem or lemma at one order")
    v.add_argument("theorem", choices=sorted(RANGES))
    v.add_argument("n", type=int)
    v.add_argument("--tol", type=float, default=EIG_TOL)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--graphs", help="graph6 file (one per line, '-' for stdin) to check instead of self-generation")
    v.add_argument("--allow-slow", action="store_true", help="enable t1 at n = 9")
    v.set_defaults(func=cmd_verify)

    pa = sub.add_parser("paths", help="witness paths and odd cycles")
    pa.add_argument("graph6")
    pa.add_argument("kind", choices=["to-edge", "to-cycle", "odd-cycle-through"])
    pa.add_argument("--cycle")
    pa.add_argument("--edge")
    pa.add_argument("--xi", type=int)
    pa.add_argument("--v", type=int)
    pa.set_defaults(func=cmd_paths)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, GraphError, EnumerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpectralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
