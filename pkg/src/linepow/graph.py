"""Undirected multigraphs with loops, plus BFS layer and cycle utilities.

Vertices are dense integers ``0..n-1``.  A loop contributes 2 to the degree
of its vertex.  Graph values are immutable; every "mutation" returns a new
graph.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

INF = math.inf


class GraphError(ValueError):
    """Invalid vertex, edge, or construction request."""


class CapExceeded(GraphError):
    """A documented size cap was exceeded."""


class EdgeRef(NamedTuple):
    """One concrete edge: endpoints ``u <= v`` and the parallel-edge slot."""

    u: int
    v: int
    slot: int = 0

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def ends(self) -> tuple:
        return (self.u,) if self.u == self.v else (self.u, self.v)


def edge_ref(u: int, v: int, slot: int = 0) -> EdgeRef:
    if u > v:
        u, v = v, u
    return EdgeRef(u, v, slot)


class MultiGraph:
    """Compact undirected multigraph.

    ``adjacency[v]`` is a sorted tuple of ``(neighbor, multiplicity)`` pairs
    for neighbors other than ``v``; ``loops[v]`` counts loops at ``v``.
    """

    __slots__ = ("n", "adjacency", "loops", "_mult", "_degrees", "_m", "_hash")

    def __init__(self, n: int, adjacency: Sequence[Iterable], loops: Optional[Sequence[int]] = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(adjacency) != n:
            raise GraphError("adjacency length does not match n")
        mult = [dict() for _ in range(n)]
        for v, row in enumerate(adjacency):
            for w, k in row:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise GraphError("loops belong in the loops array")
                if k <= 0:
                    raise GraphError("multiplicities must be positive")
                mult[v][w] = mult[v].get(w, 0) + k
        for v in range(n):
            for w, k in mult[v].items():
                if mult[w].get(v) != k:
                    raise GraphError(f"asymmetric multiplicity between {v} and {w}")
        loops = tuple(loops) if loops is not None else (0,) * n
        if len(loops) != n or any(c < 0 for c in loops):
            raise GraphError("invalid loop counts")
        self.n = n
        self._mult = mult
        self.adjacency = tuple(tuple(sorted(d.items())) for d in mult)
        self.loops = loops
        self._degrees = tuple(sum(d.values()) + 2 * loops[v] for v, d in enumerate(mult))
        self._m = sum(self._degrees) // 2
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "MultiGraph":
        """Build from an iterable of ``(u, v)`` pairs; repeats become parallel edges."""
        adj = [dict() for _ in range(n)]
        loops = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loops[u] += 1
            else:
                adj[u][v] = adj[u].get(v, 0) + 1
                adj[v][u] = adj[v].get(u, 0) + 1
        return cls(n, [list(d.items()) for d in adj], loops)

    @classmethod
    def empty(cls, n: int = 0) -> "MultiGraph":
        return cls(n, [()] * n)

    # basic queries ----------------------------------------------------

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return self.loops[u]
        return self._mult[u].get(v, 0)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degrees[v]

    @property
    def degrees(self) -> tuple:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    @property
    def num_edges(self) -> int:
        return self._m

    def neighbors(self, v: int) -> list:
        """Distinct neighbors of ``v`` other than itself."""
        self._check_vertex(v)
        return [w for w, _ in self.adjacency[v]]

    def has_edge(self, e: EdgeRef) -> bool:
        u, v, slot = e
        if not (0 <= u < self.n and 0 <= v < self.n) or slot < 0:
            return False
        return slot < self.multiplicity(u, v)

    def edges(self) -> Iterator[tuple]:
        """Every edge as a ``(u, v)`` pair with ``u <= v``, parallel edges repeated."""
        for e in self.edge_refs():
            yield (e.u, e.v)

    def edge_refs(self) -> list:
        """All edges in lexicographic ``(u, v, slot)`` order."""
        out = []
        for u in range(self.n):
            row = [(u, self.loops[u])] if self.loops[u] else []
            row += [(w, k) for w, k in self.adjacency[u] if w > u]
            row.sort()
            for w, k in row:
                out.extend(EdgeRef(u, w, s) for s in range(k))
        return out

    def is_simple(self) -> bool:
        return not any(self.loops) and all(k == 1 for row in self.adjacency for _, k in row)

    def is_regular(self) -> bool:
        return len(set(self._degrees)) <= 1

    # derived graphs ---------------------------------------------------

    def add_edges(self, edges: Iterable) -> "MultiGraph":
        return MultiGraph.from_edges(self.n, list(self.edges()) + list(edges))

    def add_vertices(self, k: int) -> "MultiGraph":
        return MultiGraph.from_edges(self.n + k, self.edges())

    def remove_edge(self, e: EdgeRef) -> "MultiGraph":
        self._require_edge(e)
        edges = list(self.edges())
        edges.remove((e.u, e.v))
        return MultiGraph.from_edges(self.n, edges)

    def delete_vertex(self, v: int):
        """Remove ``v`` and its edges; returns ``(graph, mapping)`` old id -> new id."""
        self._check_vertex(v)
        mapping = {x: (x if x < v else x - 1) for x in range(self.n) if x != v}
        edges = [(mapping[a], mapping[b]) for a, b in self.edges() if v not in (a, b)]
        return MultiGraph.from_edges(self.n - 1, edges), mapping

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Graph with vertex ``x`` renamed ``perm[x]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return MultiGraph.from_edges(self.n, ((perm[a], perm[b]) for a, b in self.edges()))

    def induced_on_edges(self, edge_indexes: Iterable[int]) -> "MultiGraph":
        refs = self.edge_refs()
        return MultiGraph.from_edges(self.n, ((refs[i].u, refs[i].v) for i in edge_indexes))

    def nonisolated(self) -> "MultiGraph":
        """Drop isolated vertices (renumbering the rest in order)."""
        keep = [v for v in range(self.n) if self._degrees[v] > 0]
        index = {v: i for i, v in enumerate(keep)}
        return MultiGraph.from_edges(len(keep), ((index[a], index[b]) for a, b in self.edges()))

    # dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency and self.loops == other.loops

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adjacency, self.loops))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self._m}, maxdeg={self.max_degree})"

    # helpers ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, (int,)) or not 0 <= v < self.n:
            raise GraphError(f"invalid vertex id {v!r} (n={self.n})")

    def _require_edge(self, e: EdgeRef) -> None:
        if not self.has_edge(e):
            raise GraphError(f"edge {tuple(e)} does not exist")


@dataclass(frozen=True)
class BfsLayers:
    """Distance layers around a vertex or an edge.

    ``dist[x]`` is ``None`` for vertices not reached within ``depth``.
    """

    source: object
    layers: tuple
    dist: tuple

    def sizes(self) -> list:
        return [len(layer) for layer in self.layers]


def _bfs(g: MultiGraph, starts: Sequence[int], depth: Optional[int]) -> list:
    dist = [None] * g.n
    queue = deque()
    for s in starts:
        if dist[s] is None:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        if depth is not None and dist[x] >= depth:
            continue
        for w, _ in g.adjacency[x]:
            if dist[w] is None:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def _layers(source, dist) -> BfsLayers:
    top = max((d for d in dist if d is not None), default=-1)
    layers = [set() for _ in range(top + 1)]
    for x, d in enumerate(dist):
        if d is not None:
            layers[d].add(x)
    return BfsLayers(source, tuple(frozenset(s) for s in layers), tuple(dist))


def bfs_from_vertex(g: MultiGraph, v: int, depth: int) -> BfsLayers:
    """Layers ``N_0(v), ..., N_depth(v)`` (trailing empty layers dropped)."""
    g._check_vertex(v)
    if depth < 0:
        raise GraphError("depth must be non-negative")
    return _layers(v, _bfs(g, [v], depth))


def bfs_from_edge(g: MultiGraph, e: EdgeRef, depth: int) -> BfsLayers:
    """Layers by distance from the nearer endpoint of ``e``; ``N_0`` is its endpoint set."""
    g._require_edge(e)
    if depth < 0:
        raise GraphError("depth must be non-negative")
    return _layers(e, _bfs(g, e.ends, depth))


def distances_from(g: MultiGraph, v: int) -> list:
    """Full BFS distances from ``v``; unreachable vertices get ``INF``."""
    return [INF if d is None else d for d in _bfs(g, [v], None)]


def all_pairs_distances(g: MultiGraph) -> list:
    return [distances_from(g, v) for v in range(g.n)]


def diameter(g: MultiGraph) -> float:
    """Vertex diameter; ``INF`` when disconnected, 0 for graphs with at most one vertex."""
    best = 0
    for v in range(g.n):
        best = max(best, max(distances_from(g, v)))
    return best


def is_connected(g: MultiGraph) -> bool:
    return g.n == 0 or None not in _bfs(g, [0], None)


def is_bipartite(g: MultiGraph) -> bool:
    if any(g.loops):
        return False
    side = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w, _ in g.adjacency[x]:
                if side[w] is None:
                    side[w] = 1 - side[x]
                    queue.append(w)
                elif side[w] == side[x]:
                    return False
    return True


def girth(g: MultiGraph) -> float:
    """Length of a shortest cycle: loops give 1, parallel edges 2, forests ``INF``."""
    if any(g.loops):
        return 1
    if not g.is_simple():
        return 2
    best = INF
    for s in range(g.n):
        dist = [None] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for w, _ in g.adjacency[x]:
                if dist[w] is None:
                    dist[w] = dist[x] + 1
                    parent[w] = x
                    queue.append(w)
                elif parent[x] != w:
                    best = min(best, dist[x] + dist[w] + 1)
    return best


def contains_cycle_length(g: MultiGraph, length: int) -> bool:
    """True iff ``g`` has a cycle with exactly ``length`` distinct vertices."""
    if length < 1:
        raise GraphError("cycle length must be at least 1")
    if length == 1:
        return any(g.loops)
    if length == 2:
        return any(k >= 2 for row in g.adjacency for _, k in row)
    nbrs = [[w for w, _ in row] for row in g.adjacency]

    # cycles are found from their least vertex, walking only through larger ones
    def extend(start, x, depth, visited):
        if depth == length:
            return start in nbrs[x]
        for w in nbrs[x]:
            if w > start and w not in visited:
                visited.add(w)
                if extend(start, w, depth + 1, visited):
                    return True
                visited.discard(w)
        return False

    return any(extend(s, s, 1, {s}) for s in range(g.n))


def subdivide_edge(g: MultiGraph, e: Optional[EdgeRef] = None) -> MultiGraph:
    """Replace ``e`` (default: lexicographically least edge) by a path through a new vertex."""
    if e is None:
        refs = g.edge_refs()
        if not refs:
            raise GraphError("graph has no edges to subdivide")
        e = refs[0]
    g._require_edge(e)
    edges = list(g.edges())
    edges.remove((e.u, e.v))
    w = g.n
    edges += [(e.u, w), (w, e.v)]
    return MultiGraph.from_edges(g.n + 1, edges)
