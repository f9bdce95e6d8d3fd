"""Connectivity predicates, vertex-disjoint paths, and odd-cycle witnesses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class TopologyError(ValueError):
    """A precondition of a topology routine failed."""


@dataclass(frozen=True)
class VertexPath:
    """Ordered vertex sequence. With ``closed=True`` the last vertex is joined back to the first."""

    vertices: tuple[int, ...]
    closed: bool = False

    @property
    def length(self) -> int:
        k = len(self.vertices)
        return k if self.closed else k - 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = list(zip(vs, vs[1:]))
        if self.closed:
            out.append((vs[-1], vs[0]))
        return out

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or not vs:
            return False
        if self.closed and len(vs) < 3:
            return False
        return all(g.has_edge(a, b) for a, b in self.edges())

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


@dataclass(frozen=True)
class PathPair:
    """Two paths leaving a common start vertex ``xi`` and otherwise vertex-disjoint."""

    p1: VertexPath
    p2: VertexPath
    xi: int

    def is_disjoint(self) -> bool:
        return set(self.p1.vertices) & set(self.p2.vertices) == {self.xi}

    @property
    def attachments(self) -> tuple[int, int]:
        return self.p1.vertices[-1], self.p2.vertices[-1]


@dataclass(frozen=True)
class TwoColoring:
    colors: tuple[int, ...]


# basic predicates ----------------------------------------------------------

def _bfs(adj: Sequence[Sequence[int]], root: int, banned: int = 0):
    n = len(adj)
    level = [-1] * n
    parent = [-1] * n
    level[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if level[w] < 0 and not banned >> w & 1:
                level[w] = level[u] + 1
                parent[w] = u
                queue.append(w)
    return level, parent


def is_connected(g: Graph) -> bool:
    level, _ = _bfs(g.adj, 0)
    return min(level) >= 0


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        level, _ = _bfs(g.adj, s)
        comp = [v for v in range(g.n) if level[v] >= 0]
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def _tree_path(parent, v):
    out = [v]
    while parent[v] >= 0:
        v = parent[v]
        out.append(v)
    return out


def _root_odd_cycles(g: Graph, root: int):
    """Odd cycles through ``root`` closed by a same-level BFS edge whose tree paths meet only at root."""
    level, parent = _bfs(g.adj, root)
    for u, v in g.sorted_edges():
        if level[u] >= 0 and level[u] == level[v]:
            pu, pv = _tree_path(parent, u), _tree_path(parent, v)
            if set(pu[:-1]) & set(pv[:-1]):
                continue
            yield pu[::-1] + pv[:-1]


def canonical_cycle(vertices: Sequence[int], start: int | None = None) -> VertexPath:
    """Orient a cycle so that, read from its minimum vertex, the second entry is below the last; then rotate to ``start``."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[1] > vs[-1]:
        vs = [vs[0]] + vs[1:][::-1]
    if start is not None:
        i = vs.index(start)
        vs = vs[i:] + vs[:i]
    return VertexPath(tuple(vs), closed=True)


def shortest_odd_cycle(g: Graph) -> VertexPath | None:
    best = None
    for r in range(g.n):
        for cyc in _root_odd_cycles(g, r):
            cand = canonical_cycle(cyc)
            if best is None or (cand.length, cand.vertices) < (best.length, best.vertices):
                best = cand
    return best


def bipartite_or_odd_cycle(g: Graph) -> TwoColoring | VertexPath:
    """A proper 2-colouring of a connected graph, or a shortest odd cycle when none exists."""
    level, _ = _bfs(g.adj, 0)
    if min(level) < 0:
        raise TopologyError("graph is disconnected")
    if all((level[u] - level[v]) % 2 for u, v in g.edges):
        return TwoColoring(tuple(lv % 2 for lv in level))
    return shortest_odd_cycle(g)


def is_bipartite(g: Graph) -> bool:
    return all(_component_bipartite(g, comp) for comp in components(g))


def _component_bipartite(g: Graph, comp: list[int]) -> bool:
    level, _ = _bfs(g.adj, comp[0])
    return all((level[u] - level[v]) % 2 for u, v in g.edges if level[u] >= 0)


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices via iterative depth-first lowpoint computation."""
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    cut = set()
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if w != par:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if par >= 0:
                low[par] = min(low[par], low[u])
                if par != root and low[u] >= disc[par]:
                    cut.add(par)
        if root_children > 1:
            cut.add(root)
    return sorted(cut)


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        raise TopologyError(f"2-connectivity needs n >= 3, got {g.n}")
    return is_connected(g) and not articulation_points(g)


def is_hamiltonian(g: Graph) -> bool:
    """Held-Karp style subset DP; fine for the small orders used here."""
    n = g.n
    if n > 20:
        raise TopologyError("hamiltonicity check limited to n <= 20")
    if n < 3:
        return False
    masks = g.masks
    full = (1 << n) - 1
    # reach[S] = bitmask of end vertices v such that a path from 0 covers exactly S ending at v
    reach = [0] * (1 << n)
    reach[1] = 1
    for s in range(1, 1 << n, 2):
        ends = reach[s]
        if not ends:
            continue
        e = ends
        while e:
            v = (e & -e).bit_length() - 1
            e &= e - 1
            nxt = masks[v] & ~s
            while nxt:
                w = (nxt & -nxt).bit_length() - 1
                nxt &= nxt - 1
                reach[s | 1 << w] |= 1 << w
    return bool(reach[full] & masks[0])


# vertex-disjoint paths by unit-capacity flow --------------------------------

def _disjoint_paths(adj: Sequence[Sequence[int]], s: int, t: int, limit: int | None = None) -> list[list[int]]:
    """Maximum family of s-t paths sharing no inner vertex.

    Each vertex v is split into in-node 2v and out-node 2v+1 joined by a unit
    arc; augmenting paths are found breadth-first with neighbours scanned in
    ascending order, so the output is deterministic.
    """
    n = len(adj)
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b, c):
        if (a, b) not in cap:
            nbrs[a].append(b)
            nbrs[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for w in adj[u]:
            arc(2 * u + 1, 2 * w, 1)
    for lst in nbrs:
        lst.sort()
    src, snk = 2 * s + 1, 2 * t
    orig = dict(cap)
    flow = 0
    while limit is None or flow < limit:
        prev = {src: -1}
        queue = deque([src])
        while queue and snk not in prev:
            a = queue.popleft()
            for b in nbrs[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if snk not in prev:
            break
        b = snk
        while prev[b] >= 0:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    used = {k for k in orig if orig[k] - cap[k] > 0 and k[0] % 2 == 1 and k[1] % 2 == 0}
    paths = []
    for _ in range(flow):
        walk = [s]
        node = src
        while node != snk:
            nxt = next(b for (a, b) in sorted(used) if a == node)
            used.discard((node, nxt))
            walk.append(nxt // 2)
            node = nxt + 1 if nxt != snk else snk
        paths.append(walk)
    return paths


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of pairwise inner-disjoint u-v paths."""
    if u == v:
        raise TopologyError("local connectivity needs distinct vertices")
    return len(_disjoint_paths(g.adj, u, v))


def inner_disjoint_paths(g: Graph, u: int, v: int) -> list[VertexPath]:
    if u == v:
        raise TopologyError("inner-disjoint paths need distinct vertices")
    return [VertexPath(tuple(p)) for p in _disjoint_paths(g.adj, u, v)]


def vertex_connectivity(g: Graph) -> int:
    """Minimum local connectivity over non-adjacent pairs; n-1 for complete graphs, 0 if disconnected."""
    if not is_connected(g):
        return 0
    n = g.n
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                best = min(best, local_connectivity(g, u, v))
    return best


# constructive path lemmas ----------------------------------------------------

def _check_cycle(g: Graph, cyc: VertexPath | Sequence[int]) -> VertexPath:
    c = cyc if isinstance(cyc, VertexPath) else VertexPath(tuple(cyc), closed=True)
    if not c.closed:
        c = VertexPath(c.vertices, closed=True)
    if not c.is_valid_in(g):
        raise TopologyError(f"{list(c.vertices)} is not a cycle of the graph")
    return c


def two_paths_to_edge(g: Graph, cyc, e: tuple[int, int], xi: int) -> PathPair:
    """Paths from ``xi`` to each end of cycle edge ``e``, meeting only at ``xi``.

    Replaces ``e`` by a path u-w-v through a fresh vertex w and takes two
    inner-disjoint xi-w paths by flow; dropping w leaves the pair.
    """
    if g.n < 3 or not is_two_connected(g):
        raise TopologyError("graph is not 2-connected")
    c = _check_cycle(g, cyc)
    u, v = e
    if (u, v) not in c.edges() and (v, u) not in c.edges():
        raise TopologyError(f"edge {(u, v)} is not on the cycle")
    if xi in c:
        raise TopologyError(f"vertex {xi} lies on the cycle")
    w = g.n
    adj = [list(a) for a in g.adj] + [[u, v]]
    adj[u].remove(v)
    adj[v].remove(u)
    adj[u].append(w)
    adj[v].append(w)
    for a in adj:
        a.sort()
    paths = _disjoint_paths(adj, xi, w, limit=2)
    if len(paths) < 2:
        raise TopologyError("could not find two disjoint paths")  # unreachable for 2-connected input
    by_end = {p[-2]: p[:-1] for p in paths}
    return PathPair(VertexPath(tuple(by_end[u])), VertexPath(tuple(by_end[v])), xi)


def two_paths_to_cycle(g: Graph, cyc, xi: int) -> PathPair:
    """Two paths from ``xi`` to the cycle, each touching it only at its end, sharing only ``xi``."""
    c = _check_cycle(g, cyc)
    vs = c.vertices
    pair = two_paths_to_edge(g, c, (vs[0], vs[1]), xi)
    on = set(vs)

    def cut(p: VertexPath) -> VertexPath:
        out = []
        for x in p.vertices:
            out.append(x)
            if x in on:
                break
        return VertexPath(tuple(out))

    return PathPair(cut(pair.p1), cut(pair.p2), xi)


def _arc(cycle: Sequence[int], a: int, b: int) -> list[int]:
    """Vertices of the cycle from a to b following its orientation."""
    i = cycle.index(a)
    out = []
    k = len(cycle)
    while True:
        x = cycle[i % k]
        out.append(x)
        if x == b:
            return out
        i += 1


def splice_odd_cycle(g: Graph, cyc, mu: int) -> VertexPath:
    """Odd cycle through ``mu`` from an odd cycle avoiding it.

    Two paths from ``mu`` land on the cycle at a1, a2; of the two arcs between
    them the one with the right parity closes an odd cycle.
    """
    c = _check_cycle(g, cyc)
    if c.length % 2 == 0:
        raise TopologyError("base cycle must be odd")
    if mu in c:
        return canonical_cycle(c.vertices, start=mu)
    pair = two_paths_to_cycle(g, c, mu)
    a1, a2 = pair.attachments
    w1 = _arc(c.vertices, a1, a2)
    w2 = _arc(c.vertices[::-1], a1, a2)
    legs = pair.p1.length + pair.p2.length
    arc = w1 if (legs + len(w1) - 1) % 2 else w2
    verts = list(pair.p1.vertices) + arc[1:-1] + list(reversed(pair.p2.vertices))[:-1]
    return canonical_cycle(verts, start=mu)


def odd_cycle_through(g: Graph, mu: int) -> VertexPath:
    """An odd cycle containing ``mu``, the shortest among the candidates tried.

    Candidates are the breadth-first odd cycles rooted at ``mu`` and the
    parity splice of a shortest odd cycle of the graph.
    """
    if not 0 <= mu < g.n:
        raise TopologyError(f"vertex {mu} out of range")
    if g.n < 3 or not is_two_connected(g):
        raise TopologyError("graph is not 2-connected")
    base = bipartite_or_odd_cycle(g)
    if isinstance(base, TwoColoring):
        raise TopologyError("graph is bipartite")
    cands = [splice_odd_cycle(g, base, mu)]
    cands += [canonical_cycle(cyc, start=mu) for cyc in _root_odd_cycles(g, mu)]
    return min(cands, key=lambda c: (c.length, c.vertices))
