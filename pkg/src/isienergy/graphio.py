"""graph6 and edge-list readers/writers."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph, GraphError

__all__ = [
    "Graph6Error",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "read_graph6_lines",
]

_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at byte {position})"
        super().__init__(message)
        self.position = position


def _sixes(text: str, start: int) -> list[int]:
    out = []
    for i in range(start, len(text)):
        c = ord(text[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside graph6 range 63..126", i)
        out.append(c - 63)
    return out


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    offset = 0
    if s.startswith(_HEADER):
        offset = len(_HEADER)
    if offset >= len(s):
        raise Graph6Error("empty graph6 string", offset)
    vals = _sixes(s, offset)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated size field", offset + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated size field", offset + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"bit field truncated: need {need} bytes, got {len(body)}", offset + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit field", offset + pos + need)
    bits = 0
    k = 0
    for v in body:
        for shift in range(5, -1, -1):
            if k < nbits and v >> shift & 1:
                bits |= 1 << k
            k += 1
    return Graph._from_bits(n, bits)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in range(30, -1, -6)]
    nbits = n * (n - 1) // 2
    body = []
    bits = g.bits
    for start in range(0, nbits, 6):
        v = 0
        for k in range(start, start + 6):
            v = (v << 1) | (bits >> k & 1 if k < nbits else 0)
        body.append(v)
    return "".join(chr(v + 63) for v in head + body)


def read_graph6_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for the non-blank lines of a graph6 file."""
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if line:
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of 1-indexed ``u v`` pairs."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("edge list is empty")
    try:
        n, m = (int(x) for x in rows[0])
        pairs = [(int(a) - 1, int(b) - 1) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"edge list header says {m} edges, found {len(pairs)}")
    return Graph(n, pairs)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
