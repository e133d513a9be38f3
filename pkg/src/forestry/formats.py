"""Text formats for graphs: edge lists and graph6.

The edge-list format is the package's native one: a header line "n m",
then m lines "u v" with 0-indexed endpoints.  Lines whose first
non-space character is '#' are comments, blank lines are skipped, and
repeating a pair accumulates multiplicity.  graph6 (the usual 6-bit
upper-triangle encoding) is accepted for simple graphs.

Parse problems raise ValueError; structural problems (loops, bad
vertex ids) surface as the graph errors from from_edge_list.
"""

from __future__ import annotations

from .errors import NotSimple
from .multigraph import MultiGraph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _meaningful_lines(text):
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield s


def parse_edge_list(text):
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ValueError("empty input, expected an 'n m' header line")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"header must be two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ValueError(f"header counts must be nonnegative, got {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)} edge lines")
    pairs = []
    for line in body:
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        try:
            pairs.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ValueError(f"edge line must be two integers, got {line!r}") from None
    return from_edge_list(n, pairs)


def format_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    for u, v in g.edge_list():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def _g6_bytes(s):
    vals = []
    for ch in s:
        o = ord(ch) - 63
        if not 0 <= o <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(o)
    return vals


def parse_graph6(text):
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    vals = _g6_bytes(s)
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise ValueError("truncated graph6 vertex count")
            n = 0
            for v in vals[2:8]:
                n = n << 6 | v
            rest = vals[8:]
        else:
            if len(vals) < 4:
                raise ValueError("truncated graph6 vertex count")
            n = vals[1] << 12 | vals[2] << 6 | vals[3]
            rest = vals[4:]
    else:
        n = vals[0]
        rest = vals[1:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ValueError(
            f"graph6 body for {n} vertices needs {(nbits + 5) // 6} "
            f"characters, got {len(rest)}"
        )
    bits = []
    for v in rest:
        for k in range(5, -1, -1):
            bits.append(v >> k & 1)
    pairs = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                pairs.append((u, v))
            i += 1
    if any(bits[nbits:]):
        raise ValueError("graph6 padding bits must be zero")
    return from_edge_list(n, pairs)


def format_graph6(g):
    for u, v, t in g.bundles():
        if t > 1:
            raise NotSimple(f"graph6 cannot encode the parallel bundle {u}-{v}")
    n = g.n
    out = []
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.append((n >> 12 & 63) + 63)
        out.append((n >> 6 & 63) + 63)
        out.append((n & 63) + 63)
    else:
        raise ValueError(f"{n} vertices is past the graph6 writer's range")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.multiplicity(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return "".join(chr(c) for c in out)


def parse_graph(text):
    """Auto-detect: an 'n m' header line means edge list, else graph6."""
    for line in _meaningful_lines(text):
        toks = line.split()
        if line[0].isdigit() and len(toks) == 2:
            return parse_edge_list(text)
        return parse_graph6(line)
    raise ValueError("no graph data in input")
