"""Certify the extremal theorems over a range of orders and write one JSON report per run."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from leastq.enumeration import verify_theorem_1, verify_theorem_2


@dataclass
class SweepConfig:
    t1_orders: tuple[int, ...] = (3, 4, 5, 6, 7, 8)
    t2_orders: tuple[int, ...] = tuple(range(4, 13))
    tol: float = 1e-9
    jobs: int = 1
    out: Path = Path("results/theorem_sweep.json")


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in cfg.t1_orders:
        rows.append({"theorem": "t1", **verify_theorem_1(n, tol=cfg.tol, jobs=cfg.jobs, allow_slow=n >= 9).to_dict()})
    for n in cfg.t2_orders:
        rows.append({"theorem": "t2", **verify_theorem_2(n, tol=cfg.tol).to_dict()})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t1", type=int, nargs="*", default=list(SweepConfig.t1_orders))
    ap.add_argument("--t2", type=int, nargs="*", default=list(SweepConfig.t2_orders))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=SweepConfig.out)
    a = ap.parse_args()
    cfg = SweepConfig(tuple(a.t1), tuple(a.t2), jobs=a.jobs, out=a.out)
    rows = run(cfg)
    print(f"{'thm':<4}{'n':>3}{'classes':>9}{'min q':>13}{'expected':>13}{'#argmin':>9}  verdict  seconds")
    for r in rows:
        print(f"{r['theorem']:<4}{r['n']:>3}{r['graph_count']:>9}{r['min_q']:>13.9f}{r['expected_q']:>13.9f}"
              f"{len(r['argmin']):>9}  {r['verdict']:<7}  {r['wall_clock']:.2f}")
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(json.dumps({"config": {k: str(v) for k, v in asdict(cfg).items()}, "runs": rows}, indent=2))
    raise SystemExit(0 if all(r["verdict"] == "pass" for r in rows) else 1)


if __name__ == "__main__":
    main()
