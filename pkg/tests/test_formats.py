import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from linepow.families import figure2_graph, heawood, petersen, w_incidence
from linepow.formats import (
    FormatError, decode, encode, from_edgelist, from_graph6, sniff, to_edgelist, to_graph6, to_sparse6,
)
from linepow.graph import MultiGraph
from oracles import random_graph


def k(n):
    return MultiGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_k4_graph6():
    assert to_graph6(k(4)) == b"C~"
    assert from_graph6(b"C~") == k(4)


def test_empty_roundtrip():
    g = MultiGraph.empty(0)
    for fmt in ("graph6", "sparse6", "edgelist"):
        assert decode(encode(g, fmt), fmt) == g


def test_multigraph_formats():
    g = MultiGraph.from_edges(3, [(0, 1), (0, 1), (2, 2)])
    assert from_edgelist(to_edgelist(g)) == g
    assert decode(encode(g, "sparse6"), "sparse6") == g
    with pytest.raises(ValueError, match="simple"):
        to_graph6(g)


def test_headers_and_sniffing():
    g = petersen()
    assert decode(b">>graph6<<" + to_graph6(g)) == g
    assert decode(b">>sparse6<<" + to_sparse6(g)) == g
    assert sniff(to_sparse6(g)) == "sparse6"
    assert sniff(to_graph6(g)) == "graph6"
    assert sniff(to_edgelist(g)) == "edgelist"


def test_large_n_size_encoding():
    g = MultiGraph.from_edges(70, [(0, 69), (5, 6)])
    s = to_graph6(g)
    assert s[:1] == b"~"
    assert from_graph6(s) == g
    assert nx.from_graph6_bytes(s).number_of_edges() == 2


@pytest.mark.parametrize("make", [heawood, petersen, figure2_graph, lambda: w_incidence(2)])
def test_bit_exact_against_networkx(make):
    g = make()
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    assert to_graph6(g) == nx.to_graph6_bytes(G, header=False).strip()
    assert to_sparse6(g) == nx.to_sparse6_bytes(G, header=False).strip()


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_simple_graphs_decode_in_networkx(seed):
    g = random_graph(random.Random(seed), max_n=20, max_edges=30, multi=False)
    for blob, reader in ((to_graph6(g), nx.from_graph6_bytes), (to_sparse6(g), nx.from_sparse6_bytes)):
        G = reader(blob)
        assert G.number_of_nodes() == g.n
        assert sorted(tuple(sorted(e)) for e in G.edges()) == sorted(g.edges())


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_multigraph_roundtrip(seed):
    g = random_graph(random.Random(seed), max_n=20, max_edges=30, multi=True)
    for fmt in ("sparse6", "edgelist"):
        assert decode(encode(g, fmt), fmt) == g


def test_malformed_inputs_report_position():
    with pytest.raises(FormatError) as exc:
        from_edgelist(b"3 2\n0 1\n0 x\n")
    assert exc.value.position == 3
    with pytest.raises(FormatError):
        from_edgelist(b"2 1\n0 5\n")
    with pytest.raises(FormatError):
        from_edgelist(b"2 2\n0 1\n")
    with pytest.raises(FormatError):
        from_graph6(b"C~~")
    with pytest.raises(FormatError):
        decode(b"\x01\x02", "graph6")


def test_edgelist_comments():
    g = from_edgelist(b"# a path\n3 2\n0 1\n1 2  # tail\n")
    assert g == MultiGraph.from_edges(3, [(0, 1), (1, 2)])
