"""Edge-to-edge distances and line-graph powers, kept implicit as bitsets.

Edge distance convention: 0 for the same edge, otherwise
``1 + min d_G(x, y)`` over endpoints ``x`` of one edge and ``y`` of the
other.  Parallel edges are therefore at distance 1, and a loop's endpoint
set is its single vertex.
"""
from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from .graph import INF, CapExceeded, EdgeRef, GraphError, MultiGraph, all_pairs_distances, diameter, girth

MAX_EDGES = 5000


def _as_int(x):
    return INF if math.isinf(x) else int(x)


class EdgeUniverse:
    """Indexed edge set of a multigraph with cached vertex and edge distances."""

    def __init__(self, g: MultiGraph):
        if g.num_edges > MAX_EDGES:
            raise CapExceeded(f"edge universe capped at {MAX_EDGES} edges")
        self.graph = g
        self.edges = g.edge_refs()
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.m = len(self.edges)

    def __len__(self) -> int:
        return self.m

    def lookup(self, e: EdgeRef) -> int:
        try:
            return self.index[EdgeRef(*e)]
        except KeyError:
            raise GraphError(f"edge {tuple(e)} does not exist") from None

    @cached_property
    def vertex_distances(self) -> np.ndarray:
        g = self.graph
        return np.array(all_pairs_distances(g), dtype=float).reshape(g.n, g.n)

    @cached_property
    def edge_distances(self) -> np.ndarray:
        """``m x m`` float matrix of edge distances (``inf`` across components)."""
        if self.m == 0:
            return np.zeros((0, 0))
        D = self.vertex_distances
        U = np.array([e.u for e in self.edges])
        V = np.array([e.v for e in self.edges])
        best = np.minimum(np.minimum(D[np.ix_(U, U)], D[np.ix_(U, V)]),
                          np.minimum(D[np.ix_(V, U)], D[np.ix_(V, V)]))
        out = best + 1
        np.fill_diagonal(out, 0)
        return out

    def distance(self, i: int, j: int):
        return _as_int(self.edge_distances[i, j])

    def power(self, t: int) -> "PowerAdjacency":
        return PowerAdjacency(self, t)


class PowerAdjacency:
    """Closed neighbourhoods in ``L(G)^t`` as Python-int bitsets (bit ``j`` of ``rows[i]``)."""

    def __init__(self, universe: EdgeUniverse, t: int):
        if t < 0:
            raise ValueError("t must be non-negative")
        self.universe = universe
        self.t = t
        self.m = universe.m
        rows = []
        if self.m:
            close = universe.edge_distances <= t
            packed = np.packbits(close[:, ::-1], axis=1)
            pad = packed.shape[1] * 8 - self.m
            for r in packed:
                rows.append(int.from_bytes(r.tobytes(), "big") >> pad)
        self.rows = rows

    def open_rows(self) -> list:
        return [r & ~(1 << i) for i, r in enumerate(self.rows)]

    def degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1") - 1


def _universe(g):
    return g if isinstance(g, EdgeUniverse) else EdgeUniverse(g)


def edge_distance(g, e: EdgeRef, f: EdgeRef):
    u = _universe(g)
    return u.distance(u.lookup(e), u.lookup(f))


def line_diameter(g):
    """Diameter of ``L(G)``; ``INF`` if the edges span more than one component."""
    u = _universe(g)
    if u.m == 0:
        raise GraphError("line diameter of an empty edge set is undefined")
    return _as_int(u.edge_distances.max())


def is_strong_clique(g, t: int, edge_set) -> bool:
    """All pairs of ``edge_set`` (indexes into the edge universe) within distance ``t`` in ``G``."""
    u = _universe(g)
    idx = sorted(set(edge_set))
    if any(not 0 <= i < u.m for i in idx):
        raise GraphError("edge index out of range")
    if len(idx) <= 1:
        return True
    sub = u.edge_distances[np.ix_(idx, idx)]
    return bool((sub <= t).all())


def moore_like_check(g: MultiGraph, t: int) -> bool:
    """Regular of degree >= 2, girth exactly ``2t`` and vertex diameter exactly ``t``."""
    if g.n == 0 or not g.is_regular() or g.max_degree < 2:
        return False
    return girth(g) == 2 * t and diameter(g) == t
