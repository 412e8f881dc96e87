import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from linepow.families import cycle, heawood, path, petersen, star, tree_T, w_incidence
from linepow.graph import (
    INF, EdgeRef, GraphError, MultiGraph, all_pairs_distances, bfs_from_edge, bfs_from_vertex,
    contains_cycle_length, diameter, girth, is_bipartite, is_connected, subdivide_edge,
)
from oracles import floyd_warshall, random_graph, to_nx


def test_degree_counts_loops_twice():
    g = MultiGraph.from_edges(3, [(0, 0), (0, 1), (0, 1), (1, 2)])
    assert g.degree(0) == 4
    assert g.degrees == (4, 3, 1)
    assert g.num_edges == 4
    assert sum(g.degrees) == 2 * g.num_edges
    assert g.multiplicity(0, 1) == g.multiplicity(1, 0) == 2


def test_edge_refs_are_normalised():
    g = MultiGraph.from_edges(3, [(2, 1), (1, 2), (0, 0)])
    assert g.edge_refs() == [EdgeRef(0, 0, 0), EdgeRef(1, 2, 0), EdgeRef(1, 2, 1)]
    assert all(e.u <= e.v for e in g.edge_refs())


def test_invalid_vertices_rejected():
    with pytest.raises(GraphError):
        MultiGraph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        bfs_from_vertex(path(3), 5, 1)


def test_bfs_path():
    g = path(3)
    assert list(bfs_from_vertex(g, 0, 2).layers) == [{0}, {1}, {2}]
    assert list(bfs_from_vertex(g, 0, 0).layers) == [{0}]


def test_bfs_depth_marks_unreached():
    layers = bfs_from_vertex(path(4), 0, 1)
    assert layers.dist[3] is None


def test_bfs_heawood_layers():
    g = heawood()
    for v in range(g.n):
        assert bfs_from_vertex(g, v, 3).sizes() == [1, 3, 6, 4]


def test_bfs_from_edge_path():
    layers = bfs_from_edge(path(4), EdgeRef(0, 1, 0), 1)
    assert list(layers.layers) == [{0, 1}, {2}]


def test_bfs_from_loop():
    g = MultiGraph.from_edges(3, [(0, 0), (0, 1), (1, 2)])
    layers = bfs_from_edge(g, EdgeRef(0, 0, 0), 1)
    assert list(layers.layers) == [{0}, {1}]


def test_bfs_from_edge_heawood():
    g = heawood()
    for e in g.edge_refs():
        assert bfs_from_edge(g, e, 2).sizes() == [2, 4, 8]


def test_bfs_from_missing_edge():
    with pytest.raises(GraphError):
        bfs_from_edge(path(3), EdgeRef(0, 2, 0), 1)
    with pytest.raises(GraphError):
        bfs_from_edge(path(3), EdgeRef(0, 1, 1), 1)


def test_girth_examples():
    assert girth(heawood()) == 6
    assert girth(tree_T(3, 3)) == INF
    assert girth(w_incidence(2)) == 8
    assert girth(MultiGraph.from_edges(2, [(0, 0)])) == 1
    assert girth(MultiGraph.from_edges(2, [(0, 1), (0, 1)])) == 2


def test_cycle_lengths():
    assert contains_cycle_length(cycle(5), 5)
    assert not contains_cycle_length(cycle(6), 5)
    assert contains_cycle_length(petersen(), 5)
    assert not contains_cycle_length(petersen(), 7)
    assert contains_cycle_length(petersen(), 9)
    assert not any(contains_cycle_length(heawood(), ell) for ell in (3, 5, 7, 9, 11, 13))


def test_subdivide_examples():
    k2 = MultiGraph.from_edges(2, [(0, 1)])
    p = subdivide_edge(k2, EdgeRef(0, 1, 0))
    assert p.n == 3 and p.num_edges == 2 and p.max_degree == 2
    h = subdivide_edge(heawood())
    assert (h.n, h.num_edges, h.max_degree) == (15, 22, 3)
    c4 = subdivide_edge(cycle(3))
    assert girth(c4) == 4 and c4.num_edges == 4
    with pytest.raises(GraphError):
        subdivide_edge(path(3), EdgeRef(0, 2, 0))


def test_subdivide_default_is_least_edge():
    g = subdivide_edge(cycle(4))
    assert g.multiplicity(0, 1) == 0
    assert g.multiplicity(0, 4) == 1 and g.multiplicity(4, 1) == 1


def test_subdivide_lengthens_cycles_through_edge():
    g = heawood()
    for e in g.edge_refs()[:5]:
        h = subdivide_edge(g, e)
        assert girth(h) == 6 and contains_cycle_length(h, 7)
        assert h.num_edges == g.num_edges + 1


def test_delete_vertex_mapping():
    g, mapping = star(3).delete_vertex(0)
    assert g.n == 3 and g.num_edges == 0
    assert mapping == {1: 0, 2: 1, 3: 2}


def test_predicates():
    assert is_bipartite(heawood())
    assert not is_bipartite(petersen())
    assert is_connected(petersen())
    assert not is_connected(MultiGraph.from_edges(4, [(0, 1), (2, 3)]))
    assert diameter(MultiGraph.from_edges(4, [(0, 1), (2, 3)])) == INF


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_distances_match_floyd_warshall(seed):
    g = random_graph(random.Random(seed), max_n=16, max_edges=30)
    d = all_pairs_distances(g)
    fw = floyd_warshall(g)
    for i in range(g.n):
        for j in range(g.n):
            assert d[i][j] == fw[i][j]
            assert d[i][j] == d[j][i]
            for k in range(g.n):
                assert d[i][j] <= d[i][k] + d[k][j]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_girth_is_least_cycle_length(seed):
    g = random_graph(random.Random(seed), max_n=12, max_edges=18, multi=False)
    lengths = [ell for ell in range(3, g.n + 1) if contains_cycle_length(g, ell)]
    assert girth(g) == (min(lengths) if lengths else INF)
    G = nx.Graph(to_nx(g))
    assert girth(g) == nx.girth(G)
