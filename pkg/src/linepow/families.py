"""Concrete graph families used as extremal witnesses and counterexamples."""
from __future__ import annotations

from .geometry import incidence_graph, projective_plane, symplectic_quadrangle
from .graph import GraphError, MultiGraph, subdivide_edge


def tree_T(k: int, delta: int) -> MultiGraph:
    """Rooted tree of height ``k``; root (vertex 0) and all internal vertices have degree ``delta``."""
    if k < 1 or delta < 2:
        raise GraphError("tree_T needs k >= 1 and delta >= 2")
    return _tree(k, delta, delta)


def tree_T1(k: int, delta: int) -> MultiGraph:
    """One branch of ``tree_T``: the root has degree 1, internal vertices degree ``delta``."""
    if k < 1 or delta < 2:
        raise GraphError("tree_T1 needs k >= 1 and delta >= 2")
    return _tree(k, delta, 1)


def _tree(k, delta, root_children):
    edges = []
    level = [0]
    n = 1
    for depth in range(k):
        nxt = []
        for x in level:
            for _ in range(root_children if depth == 0 else delta - 1):
                edges.append((x, n))
                nxt.append(n)
                n += 1
        level = nxt
    return MultiGraph.from_edges(n, edges)


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("simple cycles need at least 3 vertices")
    return MultiGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(delta: int) -> MultiGraph:
    return MultiGraph.from_edges(delta + 1, ((0, i) for i in range(1, delta + 1)))


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph.from_edges(10, outer + spokes + inner)


def heawood() -> MultiGraph:
    return incidence_graph(projective_plane(2))


def mobius_kantor() -> MultiGraph:
    """Generalized Petersen graph GP(8, 3)."""
    outer = [(i, (i + 1) % 8) for i in range(8)]
    spokes = [(i, i + 8) for i in range(8)]
    inner = [(8 + i, 8 + (i + 3) % 8) for i in range(8)]
    return MultiGraph.from_edges(16, outer + spokes + inner)


def pg2_incidence(q: int) -> MultiGraph:
    return incidence_graph(projective_plane(q))


def w_incidence(q: int) -> MultiGraph:
    return incidence_graph(symplectic_quadrangle(q))


def subdivided(g: MultiGraph, e=None) -> MultiGraph:
    return subdivide_edge(g, e)


def multiedge_augment(g: MultiGraph, v: int) -> MultiGraph:
    """Replace vertex ``v`` of degree ``delta = maxdeg`` by a ``floor(delta/2)``-fold multiedge.

    One new endpoint takes the ``floor(delta/2)`` lowest-numbered old
    neighbours of ``v``, the other the remaining ``ceil(delta/2)``.  New
    vertices get ids ``n-1`` and ``n`` after ``v`` is deleted.
    """
    g._check_vertex(v)
    delta = g.max_degree
    if delta < 2 or g.degree(v) != delta or g.loops[v]:
        raise GraphError("multiedge_augment needs a loopless vertex of maximum degree >= 2")
    old = []
    for w, k in g.adjacency[v]:
        old.extend([w] * k)
    h, mapping = g.delete_vertex(v)
    half = delta // 2
    x, y = h.n, h.n + 1
    edges = list(h.edges())
    edges += [(x, y)] * half
    edges += [(mapping[w], x) for w in old[:half]]
    edges += [(mapping[w], y) for w in old[half:]]
    return MultiGraph.from_edges(h.n + 2, edges)


def c5_blowup(delta: int) -> MultiGraph:
    """Five independent sets of size ``delta/2`` in a cycle, complete bipartite between neighbours."""
    if delta < 2 or delta % 2:
        raise GraphError("c5_blowup needs an even delta >= 2")
    s = delta // 2
    part = lambda i: range(i * s, (i + 1) * s)  # noqa: E731
    edges = [(a, b) for i in range(5) for a in part(i) for b in part((i + 1) % 5)]
    return MultiGraph.from_edges(5 * s, edges)


def figure2_graph() -> MultiGraph:
    """11-vertex, 22-edge graph with an apex of degree 4 (Delta = 4, t = 2 extremal example).

    Vertex ids and their drawing coordinates:
      0: apex (1.5, 0)
      1: (2, 2)   2: (2, 1)   3: (2, -1)   4: (2, -2)
      5: (2.5, 0.5)   6: (3, 0.5)   7: (3.5, 0.5)      upper triple
      8: (2.5, -0.5)  9: (3, -0.5)  10: (3.5, -0.5)    lower triple
    Upper and lower triples are joined except between equal x-coordinates.
    """
    upper, lower = (5, 6, 7), (8, 9, 10)
    edges = [(0, u) for u in (1, 2, 3, 4)]
    edges += [(u, a) for u in (1, 2) for a in upper]
    edges += [(u, b) for u in (3, 4) for b in lower]
    edges += [(a, b) for i, a in enumerate(upper) for j, b in enumerate(lower) if i != j]
    return MultiGraph.from_edges(11, edges)


FIGURE2_APEX = 0
