"""Point-line geometries over GF(q): projective planes and symplectic quadrangles."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .fields import FieldTable, field_of_order
from .graph import MultiGraph


@dataclass(frozen=True)
class IncidenceStructure:
    """Points (labels) and lines (sorted tuples of point indexes)."""

    name: str
    points: tuple
    lines: tuple

    @property
    def flags(self) -> list:
        return [(p, i) for i, line in enumerate(self.lines) for p in line]

    def lines_through(self, p: int) -> list:
        return [i for i, line in enumerate(self.lines) if p in line]

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "points": [list(p) for p in self.points],
            "lines": [list(line) for line in self.lines],
        })


def projective_points(F: FieldTable, dim: int) -> list:
    """Normalised representatives (first nonzero coordinate 1) of PG(dim-1, q), sorted."""
    pts = []
    for vec in itertools.product(range(F.q), repeat=dim):
        nz = next((x for x in vec if x), None)
        if nz == 1:
            pts.append(vec)
    return sorted(pts)


def normalize(F: FieldTable, vec) -> tuple:
    nz = next((x for x in vec if x), None)
    if nz is None:
        raise ValueError("zero vector has no projective point")
    inv = F.inv[nz]
    return tuple(F.mul[inv][x] for x in vec)


def projective_plane(q: int) -> IncidenceStructure:
    """PG(2, q): lines are kernels of the (normalised) linear forms."""
    F = field_of_order(q)
    pts = projective_points(F, 3)
    lines = []
    for form in pts:
        lines.append(tuple(i for i, p in enumerate(pts) if F.dot(form, p) == 0))
    return IncidenceStructure(f"PG(2,{q})", tuple(pts), tuple(lines))


def symplectic_form(F: FieldTable, x, y) -> int:
    """x1*y2 - x2*y1 + x3*y4 - x4*y3."""
    m = F.mul
    a = F.sub(m[x[0]][y[1]], m[x[1]][y[0]])
    b = F.sub(m[x[2]][y[3]], m[x[3]][y[2]])
    return F.add[a][b]


def symplectic_quadrangle(q: int) -> IncidenceStructure:
    """W(q): all points of PG(3, q), lines of PG(3, q) totally isotropic for the symplectic form."""
    F = field_of_order(q)
    pts = projective_points(F, 4)
    index = {p: i for i, p in enumerate(pts)}
    seen = set()
    lines = []
    for a, b in itertools.combinations(range(len(pts)), 2):
        x, y = pts[a], pts[b]
        if symplectic_form(F, x, y) != 0:
            continue
        span = set()
        for s, t in itertools.product(range(F.q), repeat=2):
            if s == 0 and t == 0:
                continue
            vec = tuple(F.add[F.mul[s][xi]][F.mul[t][yi]] for xi, yi in zip(x, y))
            span.add(index[normalize(F, vec)])
        line = tuple(sorted(span))
        if line not in seen:
            seen.add(line)
            lines.append(line)
    lines.sort()
    return IncidenceStructure(f"W({q})", tuple(pts), tuple(lines))


def incidence_graph(s: IncidenceStructure) -> MultiGraph:
    """Bipartite flag graph: points are vertices ``0..P-1``, lines ``P..P+L-1``."""
    P = len(s.points)
    return MultiGraph.from_edges(P + len(s.lines), ((p, P + i) for p, i in s.flags))


def check_plane(s: IncidenceStructure, q: int) -> list:
    """Violated projective-plane axioms (empty when ``s`` is PG(2, q))."""
    problems = []
    N = q * q + q + 1
    if len(s.points) != N or len(s.lines) != N:
        problems.append("wrong number of points or lines")
    if any(len(line) != q + 1 for line in s.lines):
        problems.append("line of wrong size")
    counts = [0] * len(s.points)
    for line in s.lines:
        for p in line:
            counts[p] += 1
    if any(c != q + 1 for c in counts):
        problems.append("point on wrong number of lines")
    sets = [set(line) for line in s.lines]
    for a, b in itertools.combinations(range(len(s.points)), 2):
        if sum(1 for line in sets if a in line and b in line) != 1:
            problems.append(f"points {a},{b} not on exactly one common line")
            break
    for l1, l2 in itertools.combinations(range(len(sets)), 2):
        if len(sets[l1] & sets[l2]) != 1:
            problems.append(f"lines {l1},{l2} do not meet in exactly one point")
            break
    return problems


def check_quadrangle(s: IncidenceStructure, q: int) -> list:
    problems = []
    N = q ** 3 + q ** 2 + q + 1
    if len(s.points) != N or len(s.lines) != N:
        problems.append("wrong number of points or lines")
    if any(len(line) != q + 1 for line in s.lines):
        problems.append("line of wrong size")
    counts = [0] * len(s.points)
    for line in s.lines:
        for p in line:
            counts[p] += 1
    if any(c != q + 1 for c in counts):
        problems.append("point on wrong number of lines")
    sets = [set(line) for line in s.lines]
    for l1, l2 in itertools.combinations(range(len(sets)), 2):
        if len(sets[l1] & sets[l2]) > 1:
            problems.append(f"lines {l1},{l2} share two points")
            break
    return problems
