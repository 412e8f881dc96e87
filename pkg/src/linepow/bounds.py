"""Closed-form bounds on strong edge cliques, in exact integer/rational arithmetic."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class BoundReport:
    name: str
    params: dict
    value: object
    notes: list = field(default_factory=list)
    holds: bool = True
    details: dict = field(default_factory=dict)


def _check(t, delta, min_t=1, min_delta=2):
    if t < min_t:
        raise ValueError(f"t must be at least {min_t}")
    if delta < min_delta:
        raise ValueError(f"delta must be at least {min_delta}")


def tree_edges(t: int, delta: int) -> int:
    """Edges of the height-``t`` tree with all internal degrees ``delta``."""
    _check(t, delta)
    return sum(delta * (delta - 1) ** (m - 1) for m in range(1, t + 1))


def tree1_edges(t: int, delta: int) -> int:
    """Edges of a single root branch of that tree."""
    _check(t, delta)
    return sum((delta - 1) ** (m - 1) for m in range(1, t + 1))


def ht_upper_general(t: int, delta: int) -> int:
    """``floor(3/2 * delta^t) + 1``: every larger edge count forces line diameter > t."""
    _check(t, delta, min_delta=1)
    return math.floor(Fraction(3, 2) * delta ** t) + 1


def omega_upper_general(t: int, delta: int) -> Fraction:
    _check(t, delta, min_delta=1)
    return Fraction(3, 2) * delta ** t


def ht_conjecture_t3(delta: int) -> int:
    if delta < 1:
        raise ValueError("delta must be positive")
    return delta ** 3 - delta ** 2 + delta + 2


def h2_bound(delta: int) -> Fraction:
    if delta < 1:
        raise ValueError("delta must be positive")
    return Fraction(5 * delta ** 2, 4) + 1


def substrong_max(t: int, delta: int):
    """Largest possible edge set at distance <= t from every edge at a max-degree vertex.

    An ``int`` when the value is integral (always for even ``delta``), else a ``Fraction``.
    """
    _check(t, delta)
    val = sum(Fraction(delta * (delta - 1) ** (m - 1)) for m in range(1, t))
    val += Fraction(3, 2) * delta * (delta - 1) ** (t - 1)
    return int(val) if val.denominator == 1 else val


HJK_A = Fraction(881, 1000)
HJK_B = Fraction(119, 1000)
CHI_TARGET = Fraction(1941, 1000)


def corollary_lhs(x) -> int:
    """``ceil(0.881 * (2x + 1) + 0.119 * 1.5x)`` for ``x = delta^t``."""
    return math.ceil(HJK_A * (2 * x + 1) + HJK_B * Fraction(3, 2) * x)


def _corollary_holds(x: int) -> bool:
    # same comparison scaled by 2000: ceil((3881x + 1762) / 2000) * 2000 < 3882x
    return -(-(3881 * x + 1762) // 2000) * 2000 < 3882 * x


def corollary_arithmetic(t: int, delta: int) -> bool:
    _check(t, delta, min_delta=1)
    x = delta ** t
    return corollary_lhs(x) < CHI_TARGET * x


def corollary_threshold(limit: int = 10 ** 5) -> int:
    """Least ``x = delta^t`` from which the chromatic inequality holds for every larger value.

    The left side grows like 1.9405x against 1.941x, so once true it stays true
    beyond a point; we scan to ``limit`` and return the start of the final run.
    """
    start = None
    for x in range(1, limit + 1):
        if _corollary_holds(x):
            if start is None:
                start = x
        else:
            start = None
    if start is None:
        raise ValueError("inequality never settles below limit")
    return start


def corollary_first_true(limit: int = 10 ** 5) -> int:
    return next(x for x in range(1, limit + 1) if _corollary_holds(x))


BOUNDS = {
    "tree_edges": (tree_edges, ("t", "delta"), "sum_{m=1..t} D(D-1)^(m-1)"),
    "ht_upper_general": (ht_upper_general, ("t", "delta"), "floor(3/2 D^t) + 1"),
    "omega_upper_general": (omega_upper_general, ("t", "delta"), "3/2 D^t"),
    "ht_conjecture_t3": (ht_conjecture_t3, ("delta",), "D^3 - D^2 + D + 2"),
    "h2_bound": (h2_bound, ("delta",), "5 D^2 / 4 + 1"),
    "substrong_max": (substrong_max, ("t", "delta"),
                      "sum_{m=1..t-1} D(D-1)^(m-1) + 3/2 D(D-1)^(t-1)"),
    "corollary_arithmetic": (corollary_arithmetic, ("t", "delta"),
                             "ceil(0.881(2D^t+1) + 0.119*1.5D^t) < 1.941 D^t"),
}


def evaluate(name: str, *args):
    if name not in BOUNDS:
        raise KeyError(f"unknown bound {name!r}")
    fn, params, formula = BOUNDS[name]
    if len(args) != len(params):
        raise ValueError(f"{name} takes {len(params)} arguments ({', '.join(params)})")
    value = fn(*args)
    return BoundReport(name, dict(zip(params, args)), value, [formula])
