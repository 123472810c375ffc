"""graph6 and edge-list encodings.

graph6 packs the column-major upper triangle of the adjacency matrix into
6-bit printable chunks (offset 63).  Orders up to 62 use the one-byte
header; 63..258047 use the '~' + 3 byte extended header.

The edge-list text format is: first line "n m", then m lines "u v" with
0-based endpoints, u < v, ascending.
"""

from __future__ import annotations

from oddwheel.graphs import Graph, GraphError, build_graph

_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 258047


class FormatError(ValueError):
    """Malformed graph6 or edge-list input."""


def encode_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_GRAPH6_ORDER:
        raise FormatError(f"graph6 supports order <= {MAX_GRAPH6_ORDER}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    chunks = []
    for pos in range(0, len(bits), 6):
        group = bits[pos : pos + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        chunks.append(chr(value + 63))
    return head + "".join(chunks)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise FormatError("graph6 orders above 258047 not supported")
        if len(s) < 4:
            raise FormatError("truncated graph6 order field")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise FormatError(
            f"graph6 body has {len(body)} chunks, expected {expected} "
            f"for order {n}"
        )
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("edge-list header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError("edge-list header must be two integers") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def read_graph_text(text: str) -> Graph:
    """Sniff the format: an 'n m' integer header means edge list,
    anything else is treated as graph6."""
    first = text.strip().splitlines()[0] if text.strip() else ""
    parts = first.split()
    if len(parts) == 2:
        try:
            int(parts[0]), int(parts[1])
        except ValueError:
            return decode_graph6(text)
        return decode_edge_list(text)
    return decode_graph6(text)
