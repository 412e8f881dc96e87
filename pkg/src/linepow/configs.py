"""Local edge-count bounds around an edge ``e`` in a forced configuration.

If ``L(G)^t`` is a clique then ``|E| = |N[e]|`` for any edge ``e``, where
``N[e]`` is the set of edges with an endpoint within distance ``t-1`` of
``e``.  Given a small pattern containing ``e`` (a triangle through it, a loop,
...), ``|N[e]|`` is at most the pattern's own edges plus, for every pattern
vertex ``x`` at distance ``d < t`` from ``e``, one pendant branch of height
``t - d`` for each unit of ``x``'s unused degree.
"""
from __future__ import annotations

from .bounds import tree1_edges
from .graph import EdgeRef, MultiGraph, bfs_from_edge

KINDS = ("triangle", "loop", "parallel", "degree2", "C4", "C5", "girth6")


def pattern(kind: str):
    """``(graph, e, degree caps)`` for a named configuration; ``e`` is the root edge."""
    if kind == "triangle":
        g = MultiGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        return g, EdgeRef(0, 1, 0), None
    if kind == "loop":
        g = MultiGraph.from_edges(1, [(0, 0)])
        return g, EdgeRef(0, 0, 0), None
    if kind == "parallel":
        g = MultiGraph.from_edges(2, [(0, 1), (0, 1)])
        return g, EdgeRef(0, 1, 0), None
    if kind == "degree2":
        g = MultiGraph.from_edges(2, [(0, 1)])
        return g, EdgeRef(0, 1, 0), {1: -1}
    if kind in ("C4", "C5"):
        k = int(kind[1])
        g = MultiGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
        return g, EdgeRef(0, 1, 0), None
    if kind == "girth6":
        g = MultiGraph.from_edges(2, [(0, 1)])
        return g, EdgeRef(0, 1, 0), None
    raise ValueError(f"unsupported configuration {kind!r}; expected one of {KINDS}")


def tree_completion_bound(g: MultiGraph, e: EdgeRef, t: int, delta: int, caps=None) -> int:
    """Upper bound on ``|N_{L(G)^t}[e]|`` over supergraphs of ``g`` of maximum degree ``delta``.

    ``caps`` maps a vertex to a degree adjustment (e.g. ``-1`` for a vertex
    known to have degree at most ``delta - 1``).
    """
    caps = caps or {}
    layers = bfs_from_edge(g, e, t)
    near = lambda x: layers.dist[x] is not None and layers.dist[x] < t  # noqa: E731
    total = sum(1 for a, b in g.edges() if near(a) or near(b))
    for x in range(g.n):
        d = layers.dist[x]
        if d is None or d >= t:
            continue
        spare = delta + caps.get(x, 0) - g.degree(x)
        if spare < 0:
            raise ValueError(f"pattern vertex {x} exceeds its degree cap")
        total += spare * tree1_edges(t - d, delta)
    return total


def config_edge_bound(kind: str, t: int = 3, delta: int = 3) -> int:
    g, e, caps = pattern(kind)
    return tree_completion_bound(g, e, t, delta, caps)
