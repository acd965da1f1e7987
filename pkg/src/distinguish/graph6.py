"""graph6 encoding and decoding.

Implements the standard ASCII format used by graph-census tooling: a header
encoding the order (one byte for n <= 62, '~' plus three bytes up to 258047)
followed by the upper triangle of the adjacency matrix in column-major order,
packed six bits per byte, most significant bit first, zero-padded.
"""

from __future__ import annotations

from .graphs import Graph

DEFAULT_ORDER_CAP = 64

_HEADER_PREFIX = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 input."""


def _valid_byte(c: str) -> bool:
    return 63 <= ord(c) <= 126


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        raise Graph6Error(f"order {n} exceeds the supported graph6 range")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p : p + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def parse_graph6(text: str, order_cap: int = DEFAULT_ORDER_CAP) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER_PREFIX):
        s = s[len(_HEADER_PREFIX) :]
    if not s:
        raise Graph6Error("malformed header: empty input")
    if any(not _valid_byte(c) for c in s):
        bad = next(c for c in s if not _valid_byte(c))
        raise Graph6Error(f"malformed header: byte {ord(bad)} outside graph6 range")
    if s.startswith("~~"):
        if len(s) < 8:
            raise Graph6Error("malformed header: truncated 8-byte order field")
        n = 0
        for c in s[2:8]:
            n = (n << 6) | (ord(c) - 63)
        rest = s[8:]
    elif s.startswith("~"):
        if len(s) < 4:
            raise Graph6Error("malformed header: truncated 4-byte order field")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        rest = s[4:]
    else:
        n = ord(s[0]) - 63
        rest = s[1:]
    if n > order_cap:
        raise Graph6Error(f"order {n} exceeds cap {order_cap}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(rest) < nbytes:
        raise Graph6Error(
            f"truncated bits: need {nbytes} data bytes for n={n}, got {len(rest)}"
        )
    if len(rest) > nbytes:
        raise Graph6Error(f"trailing data: {len(rest) - nbytes} extra byte(s)")
    bits = []
    for c in rest:
        val = ord(c) - 63
        bits.extend((val >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    p = 0
    for j in range(1, n):
        for i in range(j):
            if bits[p]:
                edges.append((i, j))
            p += 1
    return Graph(n, edges)


def load_graph6_file(path: str, order_cap: int = DEFAULT_ORDER_CAP) -> list[Graph]:
    """Parse a newline-separated graph6 corpus; raises on the first bad line."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line, order_cap))
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from None
    return graphs
