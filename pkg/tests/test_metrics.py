import random

import pytest
from hypothesis import given, settings, strategies as st

from linepow.families import c5_blowup, cycle, heawood, path, star, subdivided, w_incidence
from linepow.graph import INF, EdgeRef, GraphError, MultiGraph
from linepow.metrics import (
    EdgeUniverse, PowerAdjacency, edge_distance, is_strong_clique, line_diameter, moore_like_check,
)
from oracles import line_graph_distances, random_graph


def test_edge_distance_examples():
    g = path(4)
    assert edge_distance(g, EdgeRef(0, 1, 0), EdgeRef(1, 2, 0)) == 1
    assert edge_distance(g, EdgeRef(0, 1, 0), EdgeRef(2, 3, 0)) == 2
    assert edge_distance(g, EdgeRef(0, 1, 0), EdgeRef(0, 1, 0)) == 0
    with pytest.raises(GraphError):
        edge_distance(g, EdgeRef(0, 2, 0), EdgeRef(0, 1, 0))


def test_parallel_and_loop_conventions():
    g = MultiGraph.from_edges(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    assert edge_distance(g, EdgeRef(0, 1, 0), EdgeRef(0, 1, 1)) == 1
    assert edge_distance(g, EdgeRef(2, 2, 0), EdgeRef(1, 2, 0)) == 1
    assert edge_distance(g, EdgeRef(2, 2, 0), EdgeRef(0, 1, 0)) == 2


def test_disconnected_is_infinite():
    g = MultiGraph.from_edges(4, [(0, 1), (2, 3)])
    assert edge_distance(g, EdgeRef(0, 1, 0), EdgeRef(2, 3, 0)) == INF
    assert line_diameter(g) == INF


def test_line_diameters():
    assert line_diameter(heawood()) == 3
    assert line_diameter(star(5)) == 1
    assert line_diameter(subdivided(heawood())) == 3
    assert line_diameter(cycle(5)) == 2
    assert line_diameter(c5_blowup(4)) == 2
    with pytest.raises(GraphError):
        line_diameter(MultiGraph.empty(3))


def test_strong_clique_examples():
    g = heawood()
    assert is_strong_clique(g, 3, range(21))
    assert not is_strong_clique(g, 2, range(21))
    assert is_strong_clique(g, 1, [4])
    with pytest.raises(GraphError):
        is_strong_clique(g, 3, [21])


def test_distance_measured_in_host_graph():
    g = path(5)
    # edges 01 and 34 are at distance 3 through the middle even though the set itself is disconnected
    assert is_strong_clique(g, 3, [0, 3])
    assert not is_strong_clique(g, 2, [0, 3])


def test_power_adjacency_rows():
    u = EdgeUniverse(cycle(6))
    p = PowerAdjacency(u, 2)
    for i in range(6):
        assert p.rows[i] >> i & 1
        assert p.degree(i) == 4
        for j in range(6):
            assert (p.rows[i] >> j & 1) == (p.rows[j] >> i & 1) == (u.distance(i, j) <= 2)


def test_moore_like():
    assert moore_like_check(heawood(), 3)
    assert moore_like_check(w_incidence(2), 4)
    assert moore_like_check(cycle(6), 3)   # degenerate 2-regular polygon
    assert not moore_like_check(heawood(), 2)
    assert not moore_like_check(path(4), 2)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_edge_distances_match_networkx_line_graph(seed):
    g = random_graph(random.Random(seed), max_n=14, max_edges=20)
    u = EdgeUniverse(g)
    expected = line_graph_distances(g)
    for i in range(u.m):
        for j in range(u.m):
            assert u.distance(i, j) == expected[i][j]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_edge_distance_is_metric(seed):
    g = random_graph(random.Random(seed), max_n=14, max_edges=18)
    D = EdgeUniverse(g).edge_distances
    m = D.shape[0]
    for i in range(m):
        assert D[i, i] == 0
        for j in range(m):
            assert D[i, j] == D[j, i]
            for k in range(m):
                assert D[i, j] <= D[i, k] + D[k, j]
