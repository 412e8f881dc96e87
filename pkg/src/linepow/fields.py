"""Finite fields GF(p^k) as full addition/multiplication tables.

Elements are integers ``0..q-1``: the base-``p`` digits of ``x`` are the
coefficients of a polynomial over GF(p) (least significant digit = constant
term).  For ``k > 1`` the modulus is the least monic irreducible polynomial
of degree ``k`` under that same integer encoding.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import CapExceeded

MAX_ORDER = 64


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int):
    """``(p, k)`` with ``q == p**k``, or ``None`` if ``q`` is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 and is_prime(p) else None


def _digits(x: int, p: int, k: int) -> list:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _polymulmod(a, b, mod, p):
    """Multiply coefficient lists (low degree first) modulo monic ``mod``."""
    k = len(mod) - 1
    prod = [0] * (2 * k)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
    return prod[:k]


def _is_reducible(mod, p):
    """True iff the monic polynomial ``mod`` is reducible over GF(p)."""
    k = len(mod) - 1
    # brute force: try every monic divisor of degree 1..k//2
    for d in range(1, k // 2 + 1):
        for low in range(p ** d):
            div = _digits(low, p, d) + [1]
            rem = list(mod)
            for top in range(k, d - 1, -1):
                c = rem[top]
                if c:
                    for i in range(d + 1):
                        rem[top - d + i] = (rem[top - d + i] - c * div[i]) % p
            if not any(rem[:d]):
                return True
    return False


def least_irreducible(p: int, k: int) -> list:
    """Coefficients (constant term first, leading 1 last) of the least monic irreducible."""
    for low in range(p ** k):
        mod = _digits(low, p, k) + [1]
        if mod[0] == 0:
            continue
        if not _is_reducible(mod, p):
            return mod
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class FieldTable:
    p: int
    k: int
    q: int
    modulus: tuple
    add: tuple = field(repr=False)
    mul: tuple = field(repr=False)
    neg: tuple = field(repr=False)
    inv: tuple = field(repr=False)

    @property
    def elements(self) -> range:
        return range(self.q)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(q)")
        return self.mul[a][self.inv[b]]

    def dot(self, xs, ys) -> int:
        acc = 0
        for x, y in zip(xs, ys):
            acc = self.add[acc][self.mul[x][y]]
        return acc


def build_field(p: int, k: int = 1) -> FieldTable:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be positive")
    q = p ** k
    if q > MAX_ORDER:
        raise CapExceeded(f"field order {q} exceeds cap {MAX_ORDER}")
    mod = tuple(least_irreducible(p, k)) if k > 1 else (0, 1)
    digits = [_digits(x, p, k) for x in range(q)]
    add = tuple(
        tuple(_undigits([(a + b) % p for a, b in zip(digits[x], digits[y])], p) for y in range(q))
        for x in range(q)
    )
    if k == 1:
        mul = tuple(tuple((x * y) % p for y in range(q)) for x in range(q))
    else:
        mul = tuple(
            tuple(_undigits(_polymulmod(digits[x], digits[y], list(mod), p), p) for y in range(q))
            for x in range(q)
        )
    neg = tuple(next(y for y in range(q) if add[x][y] == 0) for x in range(q))
    inv = [0] * q
    for x in range(1, q):
        inv[x] = next(y for y in range(1, q) if mul[x][y] == 1)
    return FieldTable(p, k, q, mod, add, mul, neg, tuple(inv))


def field_of_order(q: int) -> FieldTable:
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"{q} is not a prime power")
    return build_field(*pk)
