import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leastq.graph import (
    Graph, Graph6Error, GraphError, ThetaShape, add_edge, complete, cycle, graph6_decode, graph6_encode,
    h_graph, make_graph, path, remove_edge, theta_from_paths, theta_graph, theta_star,
)
from oracles import random_graph


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))


class TestConstruction:
    def test_make_graph_normalizes_orientation(self):
        g = make_graph(3, [(1, 0), (2, 1)])
        assert g.edges == {(0, 1), (1, 2)}
        assert g.degrees == [1, 2, 1]

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)], [(-1, 2)]])
    def test_make_graph_rejects(self, edges):
        with pytest.raises(GraphError):
            make_graph(3, edges)

    def test_order_bounds(self):
        with pytest.raises(GraphError):
            make_graph(0, [])
        with pytest.raises(GraphError):
            make_graph(65, [])

    def test_add_remove(self):
        g = path(4)
        h = add_edge(g, 3, 0)
        assert h == cycle(4)
        assert remove_edge(h, 0, 3) == g
        with pytest.raises(GraphError):
            add_edge(g, 0, 1)
        with pytest.raises(GraphError):
            remove_edge(g, 0, 2)
        with pytest.raises(GraphError):
            add_edge(g, 2, 2)

    def test_complete_and_cycle(self):
        assert complete(5).m == 10
        assert cycle(5).degrees == [2] * 5
        with pytest.raises(GraphError):
            cycle(2)

    def test_h_graph_chords(self):
        g = h_graph(7, [1, 2])
        assert g.m == 9
        assert g.has_edge(1, 6) and g.has_edge(2, 5)

    @pytest.mark.parametrize("n,idx", [(6, [1]), (7, [3]), (7, [2, 1]), (7, [1, 1]), (3, [1]), (9, [0])])
    def test_h_graph_rejects(self, n, idx):
        with pytest.raises(GraphError):
            h_graph(n, idx)

    def test_theta_shape_and_graph(self):
        s = ThetaShape(8, 3, 5)
        assert s.p1 == [3, 4, 5]
        assert s.eta == [2, 1, 7, 6]
        assert s.p2 == [3, 2, 1, 7, 6, 5]
        assert s.z == 4
        assert s.odd_arc == s.p1 and s.is_star()
        g = theta_graph(s)
        assert g.m == 9 and sorted(g.degrees) == [2] * 6 + [3, 3]
        sigma = s.reflection()
        assert g.relabel(sigma) == g

    def test_theta_star(self):
        g = theta_star(6)
        assert g.has_edge(0, 2) and g.has_edge(0, 5)
        with pytest.raises(GraphError):
            theta_star(7)
        with pytest.raises(GraphError):
            ThetaShape(6, 3, 3)

    def test_theta_from_paths(self):
        g = theta_from_paths(1, 1, 2)
        assert g.n == 6 and g.m == 7
        with pytest.raises(GraphError):
            theta_from_paths(0, 0, 3)


class TestGraph6:
    def test_known_strings(self):
        assert graph6_decode("@") == make_graph(1, [])
        assert graph6_decode("Bw") == make_graph(3, [(0, 1), (0, 2), (1, 2)])
        assert graph6_encode(cycle(5)) == "Dhc"
        assert graph6_encode(complete(4)) == "C~"
        assert graph6_decode(">>graph6<<Dhc") == cycle(5)

    @pytest.mark.parametrize("text,offset", [("", 0), ("B!", 1), ("Bww", 2), ("?", 0), ("~~", 1), ("Bx", None)])
    def test_malformed(self, text, offset):
        with pytest.raises(Graph6Error) as info:
            graph6_decode(text)
        if offset is not None:
            assert info.value.offset == offset

    def test_round_trip_against_networkx(self):
        rng = random.Random(7)
        for _ in range(10_000):
            g = random_graph(rng, rng.randint(1, 12))
            text = graph6_encode(g)
            assert graph6_decode(text) == g
            ref = nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
            assert text == ref

    def test_long_header(self):
        g = make_graph(64, [(0, 63)])
        text = graph6_encode(g)
        assert text.startswith("~")
        assert graph6_decode(text) == g


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_degree_sum_and_masks(g):
    assert sum(g.degrees) == 2 * g.m
    for v in range(g.n):
        assert g.masks[v].bit_count() == g.degree(v)
        assert list(g.adj[v]) == sorted(g.adj[v])


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2), st.randoms(use_true_random=False))
def test_relabel_preserves_degree_multiset(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.m == g.m
    assert sorted(h.degrees) == sorted(g.degrees)
    for u, v in g.edges:
        assert h.has_edge(perm[u], perm[v])


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2))
def test_add_then_remove_is_identity(g):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    for u, v in missing[:5]:
        assert remove_edge(add_edge(g, u, v), u, v) == g
