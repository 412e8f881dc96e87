"""Computer check that every max-degree-3 graph with line diameter <= 3 has at most 22 edges.

Steps:

(a) the subdivided Heawood graph has 22 edges and line diameter 3;
(b) no connected cubic girth->=6 graph on 16 vertices has line diameter <= 3;
(c) among one-edge subdivisions of cubic girth->=6 graphs on 14 vertices the
    strong ones are all isomorphic to (a);
(d) the local configuration bounds, combined with divisibility of |E| by 3 in
    the cubic case, leave only cubic graphs on 16 vertices of girth >= 4 and
    cubic girth->=6 graphs on 18 vertices; with ``extended`` those are
    enumerated too, and a bounded-vertex search is run as a cross-check.
"""
from __future__ import annotations

import time
from typing import Optional

from ..canon import are_isomorphic, canonical_code
from ..configs import KINDS, config_edge_bound
from ..families import heawood, subdivided
from ..formats import to_sparse6
from ..graph import MultiGraph, subdivide_edge
from ..metrics import line_diameter
from . import ExtremalResult, SearchConfig, max_edges_strong, regular_girth_graphs
from .engine import VERSION, run, witness_graph

TARGET = 23
EXPECTED_BOUNDS = {"triangle": 20, "loop": 8, "parallel": 16, "degree2": 22,
                   "C4": 24, "C5": 26, "girth6": 29}


class H33Failure(AssertionError):
    def __init__(self, step, message, graph: Optional[MultiGraph] = None):
        self.step = step
        self.graph = graph
        extra = f" [{to_sparse6(graph).decode()}]" if graph is not None else ""
        super().__init__(f"step {step}: {message}{extra}")


def step_b_config(checkpoint=None, threads=1) -> SearchConfig:
    return SearchConfig(delta=3, vertex_cap=16, exact_vertices=16, regular=True, min_girth=6,
                        threads=threads, checkpoint=checkpoint)


def _strong3(g):
    return line_diameter(g) <= 3


def _scan(step, graphs):
    for g in graphs:
        if _strong3(g):
            raise H33Failure(step, "found a strong cubic graph", g)
    return len(graphs)


def verify_h33(extended: bool = True, threads: int = 1, checkpoint: Optional[str] = None) -> ExtremalResult:
    """Run the pipeline; raises :class:`H33Failure` with the offending graph on any violation."""
    started = time.perf_counter()
    steps = {}

    w = subdivided(heawood())
    diam = line_diameter(w)
    if w.num_edges != 22 or w.max_degree != 3 or diam != 3:
        raise H33Failure("a", f"witness has {w.num_edges} edges, line diameter {diam}", w)
    steps["a"] = {"edges": w.num_edges, "vertices": w.n, "line_diameter": int(diam)}

    res_b = run("enumerate", step_b_config(checkpoint, threads))
    if not res_b.exhaustive:
        raise H33Failure("b", "enumeration did not finish")
    graphs16 = [witness_graph(x) for x in res_b.graphs]
    steps["b"] = {"graphs": _scan("b", graphs16), "strong": 0}

    code_w = canonical_code(w)
    g14 = regular_girth_graphs(14, 3, 6, threads=threads)
    seen, strong = set(), 0
    for g in g14:
        for e in g.edge_refs():
            s = subdivide_edge(g, e)
            c = canonical_code(s)
            if c in seen:
                continue
            seen.add(c)
            if _strong3(s):
                strong += 1
                if c != code_w or not are_isomorphic(s, w):
                    raise H33Failure("c", "strong subdivision not isomorphic to the witness", s)
    if strong == 0:
        raise H33Failure("c", "witness not recovered among subdivisions")
    steps["c"] = {"base_graphs": len(g14), "subdivisions": len(seen), "strong": strong}

    bounds = {k: config_edge_bound(k, 3, 3) for k in KINDS}
    if bounds != EXPECTED_BOUNDS:
        raise H33Failure("d", f"configuration bounds {bounds} differ from {EXPECTED_BOUNDS}")
    # Surviving cases are cubic (degree2 bound < 23), so |E| = 3|V|/2 is a multiple of 3.
    residual = {}
    for k, b in bounds.items():
        if b < TARGET:
            residual[k] = []
        else:
            residual[k] = [2 * m // 3 for m in range(TARGET, b + 1) if m % 3 == 0]
    steps["d"] = {"bounds": bounds, "residual_vertex_counts": residual}

    if extended:
        need4 = sorted({n for k in ("C4", "C5") for n in residual[k]})
        need6 = sorted(set(residual["girth6"]) - set(need4))
        ext = {}
        for n in need4:
            ext[f"girth4_n{n}"] = _scan("e", regular_girth_graphs(n, 3, 4, threads=threads))
        for n in need6:
            ext[f"girth6_n{n}"] = _scan("e", regular_girth_graphs(n, 3, 6, threads=threads))
        cross = max_edges_strong(SearchConfig(delta=3, t=3, vertex_cap=16, threads=threads))
        if cross.best != 22 or not cross.exhaustive:
            raise H33Failure("e", f"bounded search returned {cross.best}")
        ext["bounded_search_best"] = cross.best
        ext["bounded_search_witnesses"] = len(cross.witnesses)
        steps["e"] = ext

    return ExtremalResult(
        best=22,
        witnesses=[{"code": code_w.hex(), "n": w.n, "m": w.num_edges,
                    "sparse6": to_sparse6(w).decode(), "edges": [list(e) for e in w.edges()]}],
        exhaustive=extended,
        nodes=res_b.nodes,
        wall_time=time.perf_counter() - started,
        config_hash=res_b.config_hash,
        version=VERSION,
        details=steps,
    )
