"""Canonical labelling of small vertex-coloured multigraphs.

Individualisation-refinement: an equitable colour refinement, then a
depth-first search over individualised vertices.  The canonical leaf is the
one minimising (refinement trace, adjacency code).  Two prunings keep the
tree small:

* a leaf equivalent to the current best yields an automorphism; the search
  jumps back to the level where the two paths diverged;
* at every node, children lying in one orbit of the automorphisms found so
  far that fix the node's prefix pointwise are explored once.

Multiplicities and loop counts are part of the refinement, so the code
distinguishes multigraphs exactly.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .graph import CapExceeded, MultiGraph

MAX_VERTICES = 64


def _refine(nbrs, cells):
    """Coarsest equitable refinement of an ordered partition (label invariant)."""
    n = len(nbrs)
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups = {}
            for v in c:
                sig = tuple(sorted([(cell_of[w], k) for w, k in nbrs[v]]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not changed:
            return cells


class _Canonizer:
    def __init__(self, n, nbrs, loops, colors):
        self.n = n
        self.nbrs = nbrs
        self.loops = loops
        self.colors = colors
        self.mult = [dict(row) for row in nbrs]
        self.best_code = None
        self.best_traces = None
        self.best_path = None
        self.best_order = None
        self.autos = []

    def leaf_code(self, order):
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        head = [self.colors[v] for v in order] + [self.loops[v] for v in order]
        body = []
        for i, v in enumerate(order):
            row = sorted((pos[w], k) for w, k in self.nbrs[v] if pos[w] > i)
            body.append(len(row))
            for j, k in row:
                body.append(j)
                body.append(k)
        return tuple(head), tuple(body)

    def run(self, cells):
        self.traces = []
        self.path = []
        self._search(cells, 0)
        return self.best_order

    def _status(self, depth):
        # -1: current path prefix beats best, 0: tie so far, 1: worse
        if self.best_traces is None:
            return -1
        cur = self.traces[: depth + 1]
        ref = self.best_traces[: depth + 1]
        if cur < ref:
            return -1
        if cur > ref:
            return 1
        return 0

    def _orbit_rep(self, x, explored, prefix):
        if not explored:
            return False
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        pset = prefix
        for gamma in self.autos:
            if all(gamma[p] == p for p in pset):
                for a in range(self.n):
                    ra, rb = find(a), find(gamma[a])
                    if ra != rb:
                        parent[ra] = rb
        fx = find(x)
        return any(find(y) == fx for y in explored)

    def _search(self, cells, depth):
        """Returns the level to resume at (``depth`` itself means 'continue')."""
        cells = _refine(self.nbrs, cells)
        del self.traces[depth:]
        self.traces.append(tuple(len(c) for c in cells))
        status = self._status(depth)
        if status > 0:
            return depth
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            code = self.leaf_code(order)
            if status < 0 or code < self.best_code:
                self.best_code = code
                self.best_traces = list(self.traces)
                self.best_path = list(self.path)
                self.best_order = order
                return depth
            if code == self.best_code:
                gamma = [0] * self.n
                for a, b in zip(order, self.best_order):
                    gamma[a] = b
                self.autos.append(gamma)
                level = 0
                while level < len(self.path) and self.path[level] == self.best_path[level]:
                    level += 1
                return level
            return depth
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        explored = []
        for x in target:
            if self._orbit_rep(x, explored, self.path[:depth]):
                continue
            explored.append(x)
            child = cells[:ti] + [[x], [y for y in target if y != x]] + cells[ti + 1:]
            self.path[depth:] = [x]
            back = self._search(child, depth + 1)
            del self.path[depth:]
            if back < depth:
                return back
        return depth


def canonical_order(n: int, nbrs, loops=None, colors=None) -> list:
    """Canonical vertex order for raw adjacency ``nbrs[v] = [(w, mult), ...]``."""
    if n > MAX_VERTICES:
        raise CapExceeded(f"canonical labelling supports at most {MAX_VERTICES} vertices")
    loops = list(loops) if loops is not None else [0] * n
    colors = list(colors) if colors is not None else [0] * n
    if n == 0:
        return []
    key = [(colors[v], loops[v]) for v in range(n)]
    cells = [[v for v in range(n) if key[v] == k] for k in sorted(set(key))]
    return _Canonizer(n, nbrs, loops, colors).run(cells)


def _encode(n, nbrs, loops, colors, order) -> bytes:
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = bytearray()
    out += n.to_bytes(2, "big")
    for v in order:
        out += colors[v].to_bytes(2, "big")
        out += loops[v].to_bytes(2, "big")
    for i, v in enumerate(order):
        row = sorted((pos[w], k) for w, k in nbrs[v] if pos[w] > i)
        out += len(row).to_bytes(2, "big")
        for j, k in row:
            out.append(j)
            out += k.to_bytes(2, "big")
    return bytes(out)


def raw_canonical_code(n: int, nbrs, loops=None, colors=None) -> bytes:
    loops = list(loops) if loops is not None else [0] * n
    colors = list(colors) if colors is not None else [0] * n
    order = canonical_order(n, nbrs, loops, colors)
    return _encode(n, nbrs, loops, colors, order)


def canonical_code(g: MultiGraph, colors: Optional[Sequence[int]] = None) -> bytes:
    """Isomorphism-invariant byte string: equal iff the (coloured) multigraphs are isomorphic."""
    return raw_canonical_code(g.n, g.adjacency, g.loops, colors)


def canonical_form(g: MultiGraph) -> MultiGraph:
    """The representative of ``g``'s isomorphism class with canonical labels."""
    order = canonical_order(g.n, g.adjacency, g.loops)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def are_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_code(g) == canonical_code(h)
