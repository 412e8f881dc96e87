import itertools
import json
import random

import networkx as nx
import pytest

from linepow.canon import are_isomorphic
from linepow.families import c5_blowup, complete_bipartite, heawood, mobius_kantor
from linepow.graph import CapExceeded, MultiGraph
from linepow.metrics import line_diameter
from linepow.search import (
    CheckpointError, SearchConfig, SearchError, checkpoint_resume, enumerate_regular_girth,
    max_edges_strong, regular_girth_graphs,
)
from linepow.search import engine
from linepow.search.h33 import step_b_config, verify_h33
from oracles import atlas_strong_max, naive_cubic, to_nx


def as_nx(g):
    return nx.Graph(to_nx(g))


def same_classes(ours, theirs):
    """Each graph in ``ours`` matches exactly one in ``theirs`` (networkx isomorphism)."""
    if len(ours) != len(theirs):
        return False
    left = [as_nx(g) for g in ours]
    used = set()
    for G in left:
        hits = [i for i, H in enumerate(theirs) if nx.is_isomorphic(G, H)]
        if len(hits) != 1 or hits[0] in used:
            return False
        used.add(hits[0])
    return True


# enumeration ---------------------------------------------------------------

def test_heawood_is_unique_girth6_on_14():
    graphs = regular_girth_graphs(14, 3, 6)
    assert len(graphs) == 1 and are_isomorphic(graphs[0], heawood())


def test_cubic_on_six():
    graphs = regular_girth_graphs(6, 3, 3)
    assert len(graphs) == 2
    prism = MultiGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert any(are_isomorphic(g, complete_bipartite(3, 3)) for g in graphs)
    assert any(are_isomorphic(g, prism) for g in graphs)


def test_no_girth6_cubic_on_eight():
    assert enumerate_regular_girth(8, 3, 6) == 0


def test_mobius_kantor_unique_girth6_on_16():
    graphs = regular_girth_graphs(16, 3, 6)
    assert len(graphs) == 1 and are_isomorphic(graphs[0], mobius_kantor())


def test_visitor_sees_each_class():
    seen = []
    assert enumerate_regular_girth(8, 3, 0, seen.append) == 5
    assert len(seen) == 5 and all(g.is_regular() and g.max_degree == 3 for g in seen)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_matches_naive_oracle(n):
    assert same_classes(regular_girth_graphs(n, 3, 0), naive_cubic(n))


def test_girth_filters_against_oracle():
    oracle = naive_cubic(8)
    for g in (4, 5):
        assert same_classes(regular_girth_graphs(8, 3, g), [G for G in oracle if nx.girth(G) >= g])


def test_other_degrees():
    # 2-regular connected graphs are cycles; 4-regular on 6 vertices is the octahedron only
    assert enumerate_regular_girth(7, 2, 0) == 1
    assert enumerate_regular_girth(6, 4, 0) == 1
    assert enumerate_regular_girth(5, 4, 0) == 1


def test_enumeration_preconditions():
    with pytest.raises(SearchError):
        enumerate_regular_girth(7, 3, 0)
    with pytest.raises(CapExceeded):
        enumerate_regular_girth(66, 3, 0)


# strong search --------------------------------------------------------------

def test_delta2_t2():
    r = max_edges_strong(SearchConfig(delta=2, t=2))
    assert r.best == 5 and r.exhaustive
    assert [w["n"] for w in r.witnesses] == [5]


def test_delta4_t2_small_cap():
    r = max_edges_strong(SearchConfig(delta=4, t=2, vertex_cap=10))
    assert r.best == 20 and r.exhaustive
    graphs = [engine.witness_graph(w) for w in r.witnesses]
    assert any(are_isomorphic(g, c5_blowup(4)) for g in graphs)


@pytest.mark.parametrize("delta,t", [(2, 1), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)])
def test_matches_atlas_oracle(delta, t):
    r = max_edges_strong(SearchConfig(delta=delta, t=t, vertex_cap=7))
    best, witnesses = atlas_strong_max(delta, t)
    assert r.best == best and r.exhaustive
    assert same_classes([engine.witness_graph(w) for w in r.witnesses], witnesses)


def _brute_multigraphs(n, delta, t):
    """Max edges over all loopy multigraphs on n labelled vertices (slow oracle)."""
    slots = [(a, b) for a in range(n) for b in range(a, n)]
    best = 0
    for mult in itertools.product(range(delta + 1), repeat=len(slots)):
        edges = [s for s, k in zip(slots, mult) for _ in range(k)]
        if not edges or len(edges) <= best:
            continue
        g = MultiGraph.from_edges(n, edges)
        if g.max_degree > delta:
            continue
        G = to_nx(g)
        L = nx.line_graph(G)
        if nx.is_connected(L) and nx.diameter(L) <= t:
            best = len(edges)
    return best


@pytest.mark.parametrize("delta,t", [(2, 1), (3, 1), (3, 2), (4, 1)])
def test_multigraph_against_brute_force(delta, t):
    r = max_edges_strong(SearchConfig(delta=delta, t=t, vertex_cap=3, multigraph=True))
    assert r.best == max(_brute_multigraphs(n, delta, t) for n in (1, 2, 3))


def test_witnesses_respect_config():
    # the Petersen graph is not strong at t=2 (two edges at distance 3), so girth >= 5 leaves only C5
    r = max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=10, min_girth=5))
    assert r.best == 5
    reg = max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=10, regular=True))
    assert reg.best == 9
    assert any(are_isomorphic(engine.witness_graph(w), complete_bipartite(3, 3)) for w in reg.witnesses)
    for w in r.witnesses + reg.witnesses:
        g = engine.witness_graph(w)
        assert g.max_degree <= 3 and line_diameter(g) <= 2 and g.is_simple()


@pytest.mark.parametrize("delta,t,girth", [(3, 2, 4), (3, 3, 4), (4, 2, 4), (3, 3, 5)])
def test_girth_filter_matches_atlas(delta, t, girth):
    r = max_edges_strong(SearchConfig(delta=delta, t=t, vertex_cap=7, min_girth=girth))
    best, witnesses = atlas_strong_max(delta, t, keep=lambda G: nx.girth(G) >= girth)
    assert r.best == best
    assert same_classes([engine.witness_graph(w) for w in r.witnesses], witnesses)


def test_regular_filter_matches_atlas():
    r = max_edges_strong(SearchConfig(delta=3, t=3, vertex_cap=7, regular=True))
    best, witnesses = atlas_strong_max(3, 3, keep=lambda G: nx.is_regular(G) and G.degree(0) == 3)
    assert r.best == best
    assert same_classes([engine.witness_graph(w) for w in r.witnesses], witnesses)


def test_monotone_in_cap_and_t():
    by_cap = [max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=c)).best for c in range(2, 11)]
    assert by_cap == sorted(by_cap)
    by_t = [max_edges_strong(SearchConfig(delta=3, t=t, vertex_cap=8)).best for t in (1, 2, 3)]
    assert by_t == sorted(by_t)


def test_edge_target_certifies_absence():
    r = max_edges_strong(SearchConfig(delta=4, t=2, vertex_cap=10, edge_target=21))
    assert r.exhaustive and r.best < 21


def test_budget_exhaustion():
    r = max_edges_strong(SearchConfig(delta=3, t=3, vertex_cap=12, node_budget=5))
    assert not r.exhaustive


def test_config_validation():
    with pytest.raises(SearchError):
        max_edges_strong(SearchConfig(delta=3, t=2, min_girth=4, multigraph=True))
    with pytest.raises(CapExceeded):
        max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=100))
    with pytest.raises(SearchError):
        max_edges_strong(SearchConfig(delta=0, t=2))


def test_thread_count_does_not_change_result():
    a = max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=9, threads=1))
    b = max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=9, threads=2))
    assert a.payload() == b.payload()


# checkpoints -----------------------------------------------------------------

def test_checkpoint_resume_is_identical(tmp_path):
    path = str(tmp_path / "run.json")
    base = max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=9))
    cfg = SearchConfig(delta=3, t=2, vertex_cap=9, checkpoint=path)
    partial = max_edges_strong(cfg, stop_after=3)
    assert not partial.complete
    payload = checkpoint_resume(path, cfg)
    assert len(payload["done"]) == 3
    resumed = max_edges_strong(cfg)
    assert resumed.complete and resumed.payload() == base.payload()


def test_checkpoint_rejects_other_config(tmp_path):
    path = str(tmp_path / "run.json")
    max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=8, checkpoint=path), stop_after=1)
    with pytest.raises(CheckpointError):
        max_edges_strong(SearchConfig(delta=4, t=2, vertex_cap=8, checkpoint=path))


def test_checkpoint_detects_corruption(tmp_path):
    path = tmp_path / "run.json"
    max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=8, checkpoint=str(path)), stop_after=1)
    doc = json.loads(path.read_text())
    doc["payload"]["probe"]["best"] += 1
    path.write_text(json.dumps(doc))
    with pytest.raises(CheckpointError):
        max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=8, checkpoint=str(path)))
    path.write_text("{not json")
    with pytest.raises(CheckpointError):
        max_edges_strong(SearchConfig(delta=3, t=2, vertex_cap=8, checkpoint=str(path)))


def test_empty_checkpoint_is_fresh_run(tmp_path):
    path = tmp_path / "run.json"
    path.write_text("")
    r = max_edges_strong(SearchConfig(delta=2, t=2, checkpoint=str(path)))
    assert r.best == 5 and path.stat().st_size > 0


def test_h33_step_b_interrupt_and_resume(tmp_path):
    path = str(tmp_path / "b.json")
    fresh = engine.run("enumerate", step_b_config())
    engine.run("enumerate", step_b_config(path), stop_after=2)
    res = verify_h33(extended=False, checkpoint=path)
    assert res.details["b"]["graphs"] == len(fresh.graphs) == 1


# pruning audit ----------------------------------------------------------------

class _Recorder(engine.StrongMax):
    pruned = []

    def visit(self, state, job):
        keep = super().visit(state, job)
        if not keep and state.closed < state.n:
            self.pruned.append((state, self.threshold(job)))
        return keep


def _completions(state, cfg, limit):
    stack, count = list(engine.children(state, cfg)), 0
    while stack:
        s = stack.pop()
        count += 1
        if count > limit:
            return
        yield s
        stack.extend(engine.children(s, cfg))


@pytest.mark.parametrize("delta,t,cap", [(3, 2, 8), (2, 3, 9), (3, 3, 8)])
def test_pruned_states_hide_no_better_witness(monkeypatch, delta, t, cap):
    _Recorder.pruned = []
    monkeypatch.setitem(engine.OBJECTIVES, "strong", _Recorder)
    cfg = SearchConfig(delta=delta, t=t, vertex_cap=cap)
    engine.run("strong", cfg)
    rng = random.Random(delta * 100 + t)
    sample = rng.sample(_Recorder.pruned, min(40, len(_Recorder.pruned)))
    assert sample
    for state, threshold in sample:
        for s in _completions(state, cfg, 20000):
            g = engine.graph_of(s)
            if s.closed == s.n and g.num_edges >= threshold:
                assert line_diameter(g) > t, (state, s)
