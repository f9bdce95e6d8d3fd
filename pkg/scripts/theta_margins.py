"""Tabulate q(Θ(j,k)) - q(Θ) and the eigenvector profile of every shape."""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from leastq.eigenstructure import all_theta_shapes, classify_theta_eigenvector, verify_theta_dominance


@dataclass
class MarginConfig:
    orders: tuple[int, ...] = (4, 6, 8, 10, 12, 14)


def rows(cfg: MarginConfig):
    for n in cfg.orders:
        for shape in all_theta_shapes(n):
            d = verify_theta_dominance(shape)
            p = classify_theta_eigenvector(shape)
            yield {
                "n": n, "j": shape.j, "k": shape.k, "odd_arc": len(shape.odd_arc), "q": f"{d.q_shape:.10f}",
                "margin": f"{d.margin:.3e}", "iso_theta": d.isomorphic, "case": p.case,
                "eigenspace_dim": p.eigenspace_dim, "checks_pass": p.passed,
            }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("orders", type=int, nargs="*", default=list(MarginConfig.orders))
    cfg = MarginConfig(tuple(ap.parse_args().orders))
    out = csv.DictWriter(sys.stdout, fieldnames=list(next(rows(MarginConfig((4,))))))
    out.writeheader()
    for r in rows(cfg):
        out.writerow(r)


if __name__ == "__main__":
    main()
