"""Executable checks of the weight-function machinery behind the tree bounds.

Around a root ``v`` with a chosen neighbour set ``U`` (``j = |U|``), each
distance layer ``N_m(v)`` splits into ``A_m`` (vertices reached by a geodesic
from ``v`` through some ``u in U``) and ``R_m``.  On ``A`` the weight ``w(x)``
counts paths of length ``m-1`` from ``x`` down to ``A_1 = U``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import BoundReport, substrong_max, tree_edges
from .graph import GraphError, MultiGraph, contains_cycle_length, distances_from
from .metrics import EdgeUniverse

F32 = Fraction(3, 2)


@dataclass
class WeightAssignment:
    root: int
    U: tuple
    t: int
    A: list
    R: list
    w: dict
    A_prime: set = field(default_factory=set)
    A_star: set = field(default_factory=set)
    m_count: dict = field(default_factory=dict)
    q_count: dict = field(default_factory=dict)

    @property
    def j(self) -> int:
        return len(self.U)

    def f(self, a: int) -> Fraction:
        """``(3/2 w(a) - m(a)) / (j - m(a))`` for ``a`` in ``A'_t`` with ``m(a) < j``."""
        if a not in self.A_prime:
            raise KeyError(f"{a} is not in A'_t")
        m = self.m_count[a]
        if m >= self.j:
            raise ValueError("f(a) undefined when m(a) >= j")
        return (F32 * self.w[a] - m) / (self.j - m)

    def level_sums(self) -> list:
        return [sum(self.w[x] for x in self.A[m]) for m in range(1, self.t + 1)]


def weight_partition(g: MultiGraph, v: int, U, t: int, h_edges=None) -> WeightAssignment:
    """Layers ``A_m``/``R_m`` for ``0 <= m <= t+1``, weights, and the ``A'_t``/``A*_t`` split.

    ``h_edges`` (edge indexes into ``g.edge_refs()``) selects the subgraph H
    used for the counts ``m(a)`` and ``q(a)``; by default H is all of g.
    """
    g._check_vertex(v)
    U = tuple(sorted(set(U)))
    if not U:
        raise GraphError("U must be a nonempty set of neighbours of v")
    if any(g.multiplicity(v, u) == 0 or u == v for u in U):
        raise GraphError("every vertex of U must be a neighbour of v")
    if t < 2:
        raise ValueError("t must be at least 2")
    dv = distances_from(g, v)
    du = [distances_from(g, u) for u in U]
    A = [set() for _ in range(t + 2)]
    R = [set() for _ in range(t + 2)]
    A[0] = {v}
    for x in range(g.n):
        m = dv[x]
        if not 1 <= m <= t + 1:
            continue
        if any(d[x] == m - 1 for d in du):
            A[m].add(x)
        else:
            R[m].add(x)
    w = {u: 1 for u in A[1]}
    for m in range(2, t + 2):
        for x in A[m]:
            w[x] = sum(k * w[y] for y, k in g.adjacency[x] if y in A[m - 1])
    j = len(U)
    A_prime = {a for a in A[t] if w[a] < j}
    A_star = A[t] - A_prime
    refs = g.edge_refs()
    idx = range(len(refs)) if h_edges is None else h_edges
    m_count = {a: 0 for a in A[t]}
    q_count = {a: 0 for a in A[t]}
    for i in idx:
        e = refs[i]
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if a in m_count and a != b:
                if b in A[t - 1]:
                    m_count[a] += 1
                if b in A_prime:
                    q_count[a] += 1
    return WeightAssignment(v, U, t, A, R, w, A_prime, A_star, m_count, q_count)


def verify_sum_w(wa: WeightAssignment, delta: int) -> bool:
    """Level sums of ``w`` are at most ``j (delta-1)^(m-1)`` for ``1 <= m <= t``."""
    return all(s <= wa.j * (delta - 1) ** (m - 1) for m, s in enumerate(wa.level_sums(), start=1))


def technical_inequality(j, x, y, m, n) -> Fraction:
    """``(3x/2 - m)/(j - m) + (3y/2 - n)/(j - n)``; needs ``j > x >= m > 0``, ``j > y >= n > 0``, ``x + y >= j``."""
    if not (j > x >= m > 0 and j > y >= n > 0 and x + y >= j):
        raise ValueError(f"hypotheses violated for j={j}, x={x}, y={y}, m={m}, n={n}")
    return (F32 * x - m) / (j - m) + (F32 * y - n) / (j - n)


def technical_scan(max_j: int = 12):
    """Minimum over the admissible domain per ``j`` and the points where the value equals 1."""
    results = {}
    for j in range(1, max_j + 1):
        lo, ones = None, []
        for x, y in itertools.product(range(1, j), repeat=2):
            if x + y < j:
                continue
            for m in range(1, x + 1):
                for n in range(1, y + 1):
                    val = technical_inequality(j, x, y, m, n)
                    lo = val if lo is None else min(lo, val)
                    if val == 1:
                        ones.append((x, y, m, n))
        results[j] = (lo, ones)
    return results


def check_proposition_sub(g: MultiGraph, h_edges, v: int, t: int, route: str = "auto") -> BoundReport:
    """Check the local edge bound around ``v`` for the edge set ``h_edges`` of ``g``.

    The hypothesis is that every edge of H lies within line distance ``t`` of
    each H-edge at ``v``.  With ``route="free"`` (C_{2t+1}-free graphs) the
    bound is ``tree_edges(t, delta)``; with ``route="general"`` it is
    ``substrong_max(t, delta)``.  ``"auto"`` picks ``free`` when g has no
    ``(2t+1)``-cycle.  Violated hypotheses are reported, not raised.
    """
    uni = EdgeUniverse(g)
    h = sorted(set(h_edges))
    if any(not 0 <= i < uni.m for i in h):
        raise GraphError("edge index out of range")
    delta = g.max_degree
    hdeg = [0] * g.n
    for i in h:
        e = uni.edges[i]
        hdeg[e.u] += 1
        hdeg[e.v] += 1
    at_v = [i for i in h if v in uni.edges[i].ends]
    j = len({uni.edges[i].u if uni.edges[i].v == v else uni.edges[i].v for i in at_v})
    notes = []
    if hdeg[v] != max(hdeg):
        notes.append("v does not have maximum H-degree")
    D = uni.edge_distances
    hypothesis = all(D[i, k] <= t for i in h for k in at_v)
    if not hypothesis:
        notes.append("some H-edge is farther than t from an H-edge at v")
    free = not contains_cycle_length(g, 2 * t + 1)
    if route == "auto":
        route = "free" if free else "general"
    if route == "free" and not free:
        notes.append(f"g contains a C_{2 * t + 1}; tree route not applicable")
    T = tree_edges(t, delta)
    degv = g.degree(v)
    if route == "free":
        bound = T
        refined = (degv - j) * (Fraction(T, delta) - 1) + Fraction(j * T, delta)
    elif route == "general":
        bound = substrong_max(t, delta)
        refined = (degv - j) * (Fraction(T, delta) - 1)
        refined += sum(j * (delta - 1) ** (m - 1) for m in range(1, t))
        refined += F32 * j * (delta - 1) ** (t - 1)
    else:
        raise ValueError(f"unknown route {route!r}")
    size = len(h)
    holds = size <= bound and size <= refined
    return BoundReport(
        "proposition_sub" if route == "free" else "proposition_substrong",
        {"t": t, "delta": delta, "v": v, "j": j},
        bound,
        notes,
        holds,
        {"edges": size, "hypothesis": hypothesis, "c2t1_free": free, "route": route,
         "refined_bound": refined, "slack": bound - size},
    )
