"""graph6, sparse6 and edge-list text serialisation.

graph6/sparse6 follow McKay's published format description bit for bit,
including the 4- and 8-byte size prefixes for large ``n``.  The edge-list
format is ``"n m"`` on the first line followed by ``m`` lines ``"u v"``;
loops are written ``"u u"`` and parallel edges repeat their line.
"""
from __future__ import annotations

from .graph import MultiGraph

FORMATS = ("graph6", "sparse6", "edgelist")


class FormatError(ValueError):
    """Malformed serialised graph.  ``position`` is a byte offset or line number."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _size_bytes(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("vertex count too large for graph6/sparse6")


def _parse_size(data: bytes, pos: int):
    def sextets(start, count):
        vals = []
        for i in range(start, start + count):
            if i >= len(data):
                raise FormatError("truncated size field", i)
            c = data[i]
            if not 63 <= c <= 126:
                raise FormatError(f"invalid byte {c}", i)
            vals.append(c - 63)
        out = 0
        for x in vals:
            out = (out << 6) | x
        return out

    if pos >= len(data):
        raise FormatError("missing size field", pos)
    if data[pos] != 126:
        return sextets(pos, 1), pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        return sextets(pos + 2, 6), pos + 8
    return sextets(pos + 1, 3), pos + 4


def _pack_bits(bits) -> bytes:
    out = bytearray()
    for i in range(0, len(bits), 6):
        chunk = bits[i: i + 6]
        chunk = chunk + [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def _unpack_bits(data: bytes, start: int):
    for i in range(start, len(data)):
        c = data[i]
        if not 63 <= c <= 126:
            raise FormatError(f"invalid byte {c}", i)
        val = c - 63
        for s in range(5, -1, -1):
            yield (val >> s) & 1


def _strip(data, header: bytes) -> tuple:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    offset = 0
    if data.startswith(header):
        offset = len(header)
    return data, offset


# graph6 -------------------------------------------------------------------

def to_graph6(g: MultiGraph, header: bool = False) -> bytes:
    if not g.is_simple():
        raise ValueError("graph6 only encodes simple graphs (no loops or parallel edges)")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.multiplicity(i, j) else 0)
    body = _size_bytes(g.n) + _pack_bits(bits)
    return (b">>graph6<<" if header else b"") + body


def from_graph6(data) -> MultiGraph:
    data, pos = _strip(data, b">>graph6<<")
    n, pos = _parse_size(data, pos)
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    if len(data) - pos != nbytes:
        raise FormatError(f"expected {nbytes} data bytes, got {len(data) - pos}", pos)
    bits = list(_unpack_bits(data, pos))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[need:]):
        raise FormatError("nonzero padding bits", len(data) - 1)
    return MultiGraph.from_edges(n, edges)


# sparse6 ------------------------------------------------------------------

def _bit_width(n: int) -> int:
    k = 0
    x = n - 1
    while x > 0:
        x >>= 1
        k += 1
    return k


def _int_bits(x: int, k: int) -> list:
    return [(x >> s) & 1 for s in range(k - 1, -1, -1)]


def to_sparse6(g: MultiGraph, header: bool = False) -> bytes:
    n = g.n
    k = _bit_width(n)
    edges = sorted(((u, v) for u, v in g.edges()), key=lambda e: (e[1], e[0]))
    bits = []
    cur = 0
    for u, v in edges:
        if v == cur:
            bits += [0] + _int_bits(u, k)
        elif v == cur + 1:
            bits += [1] + _int_bits(u, k)
            cur = v
        else:
            bits += [1] + _int_bits(v, k)
            bits += [0] + _int_bits(u, k)
            cur = v
    pad = (-len(bits)) % 6
    if k < 6 and n == (1 << k) and cur == n - 2 and pad >= k + 1:
        bits += [0] + [1] * (pad - 1)
    else:
        bits += [1] * pad
    body = b":" + _size_bytes(n) + _pack_bits(bits)
    return (b">>sparse6<<" if header else b"") + body


def from_sparse6(data) -> MultiGraph:
    data, pos = _strip(data, b">>sparse6<<")
    if pos >= len(data) or data[pos:pos + 1] != b":":
        raise FormatError("sparse6 data must start with ':'", pos)
    n, pos = _parse_size(data, pos + 1)
    k = _bit_width(n)
    bits = list(_unpack_bits(data, pos))
    edges = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for bit in bits[i + 1: i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return MultiGraph.from_edges(n, edges)


# edge list ----------------------------------------------------------------

def to_edgelist(g: MultiGraph) -> bytes:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")


def from_edgelist(data) -> MultiGraph:
    if isinstance(data, bytes):
        data = data.decode("ascii")
    lines = [ln.split("#", 1)[0].strip() for ln in data.splitlines()]
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not rows:
        raise FormatError("empty edge list", 1)
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head.split())
    except ValueError:
        raise FormatError("header must be 'n m'", lineno) from None
    if len(rows) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(rows) - 1}", lineno)
    edges = []
    for lineno, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("non-integer vertex id", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex id out of range 0..{n - 1}", lineno)
        edges.append((u, v))
    return MultiGraph.from_edges(n, edges)


# dispatch -----------------------------------------------------------------

def encode(g: MultiGraph, fmt: str) -> bytes:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "sparse6":
        return to_sparse6(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def decode(data, fmt: str = "auto") -> MultiGraph:
    if fmt == "auto":
        fmt = sniff(data)
    if fmt == "graph6":
        return from_graph6(data)
    if fmt == "sparse6":
        return from_sparse6(data)
    if fmt == "edgelist":
        return from_edgelist(data)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def sniff(data) -> str:
    head = data.strip()[:11] if isinstance(data, (bytes, str)) else b""
    if isinstance(head, str):
        head = head.encode("ascii", "replace")
    if head.startswith(b":") or head.startswith(b">>sparse6<<"):
        return "sparse6"
    if head.startswith(b">>graph6<<"):
        return "graph6"
    first = head.split(b"\n", 1)[0]
    if b" " in first or first.isdigit():
        return "edgelist"
    return "graph6"
