"""Graph serialization: edge-list text and graph6.

Edge-list format::

    p <n> <m>
    e <u> <v>

with 0-based indices, u < v, and '#'-prefixed comment lines ignored.
Parse errors report 1-based line numbers.

graph6 follows the standard encoding bit-exactly, including the '~'
extended header for 63..258047 vertices.
"""
from __future__ import annotations

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph input; the message names the offending line."""


def read_edge_list(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate 'p' header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header fields") from None
            if n < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative header fields")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before 'p' header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoints") from None
            if not (0 <= u < v < n):
                raise FormatError(f"line {lineno}: need 0 <= u < v < {n}")
            if (u, v) in seen:
                raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("line 1: missing 'p <n> <m>' header")
    if len(edges) != m:
        raise FormatError(f"line {lineno}: header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    raise FormatError(f"graph6 writer supports up to 258047 vertices, got {n}")


def write_graph6(g: Graph) -> str:
    out = [_g6_encode_n(g.n)]
    bits = 0
    nbits = 0
    chunk = 0
    for j in range(1, g.n):
        row = g.adjacency_bits[j]
        for i in range(j):
            chunk = (chunk << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(chunk + 63))
                chunk = nbits = 0
    if nbits:
        out.append(chr((chunk << (6 - nbits)) + 63))
    return "".join(out)


def read_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("line 1: empty graph6 record")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise FormatError("line 1: graph6 records beyond 258047 vertices unsupported")
        if len(s) < 4:
            raise FormatError("line 1: truncated graph6 size field")
        vals = [ord(c) - 63 for c in s[1:4]]
        if any(not 0 <= v <= 63 for v in vals):
            raise FormatError("line 1: invalid graph6 size byte")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise FormatError("line 1: invalid graph6 size byte")
        body = s[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise FormatError(f"line 1: graph6 body length {len(body)} wrong for n={n}")
    stream = 0
    for c in body:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise FormatError("line 1: invalid graph6 data byte")
        stream = (stream << 6) | v
    pad = 6 * len(body) - need
    stream >>= pad
    edges = []
    pos = need
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (stream >> pos) & 1:
                edges.append((i, j))
    return Graph(n, edges)


def sniff_format(text: str) -> str:
    """Guess 'edgelist' or 'graph6' from the first meaningful byte."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#") or line.startswith("p "):
            return "edgelist"
        return "graph6"
    raise FormatError("line 1: empty input")


def loads(text: str) -> Graph:
    """Parse either supported format, sniffing by the first byte."""
    if sniff_format(text) == "edgelist":
        return read_edge_list(text)
    return read_graph6(text.strip().splitlines()[0])


def dumps(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return write_edge_list(g)
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
