"""Exact canonical forms for small graphs.

The canonical code is the minimum upper-triangle adjacency bitstring (graph6
bit order) over every labeling reachable by individualization and equitable
refinement. The refinement and the branching cell depend only on isomorphism
invariants, so the set of leaf codes is the same for isomorphic inputs and its
minimum is a complete invariant. Interchangeable twins in a branching cell are
explored once each, since swapping two twins is an automorphism fixing the
current partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import Graph, graph6_encode


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    code: int

    def graph(self) -> Graph:
        edges = set()
        pos = self.n * (self.n - 1) // 2 - 1
        for v in range(1, self.n):
            for u in range(v):
                if self.code >> pos & 1:
                    edges.add((u, v))
                pos -= 1
        return Graph(self.n, frozenset(edges))

    def graph6(self) -> str:
        return graph6_encode(self.graph())


def _code(n: int, masks: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for c in range(1, n):
        mc = masks[order[c]]
        for r in range(c):
            code = code << 1 | (mc >> order[r] & 1)
    return code


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cellmasks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            cellmasks.append(m)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                mv = masks[v]
                sig = tuple((mv & cm).bit_count() for cm in cellmasks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(c)
        cells = out
        if not split:
            return cells


def _twin_classes(n: int, masks: Sequence[int]) -> list[int]:
    rep = list(range(n))
    for v in range(n):
        for u in range(v):
            if rep[u] == u and masks[u] & ~(1 << v) == masks[v] & ~(1 << u):
                rep[v] = u
                break
    return rep


def canonical_code(n: int, masks: Sequence[int]) -> tuple[int, list[int]]:
    """Minimum code and one labeling attaining it (``order[i]`` is the vertex placed at position i)."""
    if n == 1:
        return 0, [0]
    twin = _twin_classes(n, masks)
    best = [None, None]

    def search(cells):
        cells = _refine(masks, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(n, masks, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        i = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[i]
        seen_twins = set()
        for v in cell:
            if twin[v] in seen_twins:
                continue
            seen_twins.add(twin[v])
            rest = [w for w in cell if w != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search([list(range(n))])
    return best[0], best[1]


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, canonical_code(g.n, g.masks)[0])


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``g.relabel(perm)`` equal to the canonical graph."""
    _, order = canonical_code(g.n, g.masks)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return perm


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def brute_force_form(g: Graph) -> CanonicalForm:
    """Minimum code over all n! labelings; the exhaustive reference for small n."""
    n, masks = g.n, g.masks
    return CanonicalForm(n, min(_code(n, masks, p) for p in permutations(range(n))))
