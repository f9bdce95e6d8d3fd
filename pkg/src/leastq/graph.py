"""Simple undirected graphs, the named families, and graph6 text encoding."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph construction or mutation."""


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Equality is labeled equality: same order and the same edge set.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1 or self.n > MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n!r}")
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at ({u}, {v})")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range or not normalized")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, bit ``v`` of ``masks[u]`` set iff ``uv`` is an edge."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(_norm(perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, rejecting loops, duplicates and out-of-range endpoints."""
    if not isinstance(n, int) or n < 1 or n > MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n!r}")
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphError(f"loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in ({u}, {v}) for n={n}")
        e = _norm(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
    return Graph(n, frozenset(seen))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop ({u}, {v})")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"endpoint out of range in ({u}, {v})")
    e = _norm(u, v)
    if e in g.edges:
        raise GraphError(f"edge ({u}, {v}) already present")
    return Graph(g.n, g.edges | {e})


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    e = _norm(u, v)
    if e not in g.edges:
        raise GraphError(f"edge ({u}, {v}) not present")
    return Graph(g.n, g.edges - {e})


def complete(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n with edges (i, i+1 mod n)."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def h_graph(n: int, indices: Sequence[int]) -> Graph:
    """Odd cycle C_n plus the chords v_i v_{n-i} for each i in ``indices``.

    Indices must be strictly increasing in ``1 .. (n-3)/2``; repeats would
    duplicate a chord.
    """
    if n < 5 or n % 2 == 0:
        raise GraphError(f"h_graph needs odd n >= 5, got {n}")
    top = (n - 3) // 2
    idx = list(indices)
    if not 1 <= len(idx) <= top:
        raise GraphError(f"need 1..{top} chord indices, got {len(idx)}")
    for a, b in zip(idx, idx[1:]):
        if b <= a:
            raise GraphError(f"chord indices must be strictly increasing, got {idx}")
    for i in idx:
        if not 1 <= i <= top:
            raise GraphError(f"chord index {i} outside 1..{top}")
    g = cycle(n)
    return Graph(n, g.edges | {(i, n - i) for i in idx})


@dataclass(frozen=True)
class ThetaShape:
    """Parameters of Θ(j, k): the odd cycle v_1 ... v_{n-1} v_1 plus v_0 joined to v_j, v_k.

    ``p1`` runs v_j .. v_k forward; ``p2`` runs from v_j backward around the
    cycle to v_k, its interior being the eta vertices.
    """

    n: int
    j: int
    k: int

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise GraphError(f"theta shape needs even n >= 4, got n={self.n}")
        if not 1 <= self.j < self.k <= self.n - 1:
            raise GraphError(f"need 1 <= j < k <= n-1, got j={self.j}, k={self.k}")

    @property
    def cycle_vertices(self) -> list[int]:
        return list(range(1, self.n))

    @property
    def p1(self) -> list[int]:
        return list(range(self.j, self.k + 1))

    @property
    def eta(self) -> list[int]:
        """Interior of P2 in order from v_j's side: eta_1, ..., eta_z."""
        out = []
        v = self.j
        while True:
            v = v - 1 if v > 1 else self.n - 1
            if v == self.k:
                return out
            out.append(v)

    @property
    def z(self) -> int:
        return self.n - self.k + self.j - 2

    @property
    def p2(self) -> list[int]:
        return [self.j, *self.eta, self.k]

    @property
    def p1_is_odd(self) -> bool:
        return len(self.p1) % 2 == 1

    @property
    def odd_arc(self) -> list[int]:
        """Whichever of P1, P2 has an odd vertex count, listed from v_j to v_k."""
        return self.p1 if self.p1_is_odd else self.p2

    @property
    def even_arc(self) -> list[int]:
        return self.p2 if self.p1_is_odd else self.p1

    def reflection(self) -> list[int]:
        """The automorphism fixing v_0 and swapping v_j, v_k (reverses both arcs)."""
        sigma = list(range(self.n))
        for arc in (self.p1, self.p2):
            for a, b in zip(arc, reversed(arc)):
                sigma[a] = b
        return sigma

    def is_star(self) -> bool:
        """True when the odd arc has a single interior vertex, i.e. the shape is Θ up to isomorphism."""
        return len(self.odd_arc) == 3


def theta_graph(shape: ThetaShape) -> Graph:
    n = shape.n
    edges = {(i, i + 1) for i in range(1, n - 1)}
    edges.add((1, n - 1))
    edges.add((0, shape.j))
    edges.add((0, shape.k))
    return Graph(n, frozenset(edges))


def theta_star(n: int) -> Graph:
    """The extremal Θ = Θ(2, n-1) for even n >= 4."""
    if n < 4 or n % 2:
        raise GraphError(f"theta_star needs even n >= 4, got {n}")
    return theta_graph(ThetaShape(n, 2, n - 1))


def theta_from_paths(a: int, b: int, c: int) -> Graph:
    """θ-graph whose three paths between two hubs have ``a``, ``b``, ``c`` interior vertices."""
    if min(a, b, c) < 0 or sorted((a, b, c))[1] == 0:
        raise GraphError(f"interior counts {(a, b, c)} do not give a simple θ-graph")
    n = a + b + c + 2
    s, t = 0, 1
    edges = set()
    nxt = 2
    for length in (a, b, c):
        prev = s
        for _ in range(length):
            edges.add(_norm(prev, nxt))
            prev = nxt
            nxt += 1
        edges.add(_norm(prev, t))
    return Graph(n, frozenset(edges))


# graph6 -------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise Graph6Error(f"order {n} too large", 0)


def graph6_encode(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        mask = g.masks[v]
        for u in range(v):
            bits.append(mask >> u & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    data = s.encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid character {chr(c)!r}", i)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("orders above 258047 are not supported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated order header", len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        start = 4
    else:
        n = data[0] - 63
        start = 1
    if n < 1:
        raise Graph6Error("order must be at least 1", 0)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}", start + min(len(body), need))
    edges = set()
    pos = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[pos // 6] - 63
            if byte >> (5 - pos % 6) & 1:
                edges.add((u, v))
            pos += 1
    if nbits % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", start + need - 1)
    return Graph(n, frozenset(edges))
