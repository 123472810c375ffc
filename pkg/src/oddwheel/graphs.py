"""Simple undirected graphs with the constructive algebra used throughout.

Vertices are dense integer labels 0..n-1.  Adjacency is stored row-wise as
bit vectors (Python ints), so degree queries are popcounts and neighborhood
intersections are single AND operations.  Graphs are immutable: every
"modification" returns a new value, which lets verification jobs compare
many variants side by side without defensive copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Raised when a graph construction violates simplicity or labeling."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..order-1.

    rows[u] is the neighbor bitmask of u; bit v is set iff u ~ v.
    """

    order: int
    rows: tuple[int, ...]

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(bits_of(self.rows[u]))

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.order):
            higher = self.rows[u] >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    out.append((u, v))
                higher >>= 1
                v += 1
        return tuple(out)

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled by the given vertex order."""
        verts = list(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        if len(pos) != len(verts):
            raise GraphError("duplicate vertex in subgraph selection")
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            r = self.rows[v]
            for w in bits_of(r):
                j = pos.get(w)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(verts), tuple(rows))

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given edges added (duplicates rejected)."""
        rows = list(self.rows)
        for u, v in pairs:
            _check_endpoint(u, self.order)
            _check_endpoint(v, self.order)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise GraphError(f"edge ({u},{v}) already present")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


class Component(NamedTuple):
    """A connected piece together with its original vertex labels."""

    graph: Graph
    labels: tuple[int, ...]


@dataclass(frozen=True)
class DegreeClassification:
    max_degree: int
    is_regular: bool
    is_nearly_regular: bool
    deficient_vertex: int | None


def bits_of(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_endpoint(u: int, order: int) -> None:
    if not 0 <= u < order:
        raise GraphError(f"vertex {u} out of range for order {order}")


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting loops and repeated pairs outright.

    A pair repeated in either orientation is an error, not a silent dedup:
    the callers that matter feed machine-generated edge lists, where a
    duplicate signals a bug upstream.
    """
    if order < 0:
        raise GraphError("order must be non-negative")
    rows = [0] * order
    for u, v in edges:
        _check_endpoint(u, order)
        _check_endpoint(v, order)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise GraphError(f"duplicate edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    rows = tuple((full ^ r) & ~(1 << u) for u, r in enumerate(g.rows))
    return Graph(g.order, rows)


def disjoint_union(parts: list[Graph]) -> Graph:
    """Disjoint union; vertex labels of part i are offset by the total
    order of parts 0..i-1."""
    if not parts:
        raise GraphError("disjoint_union of an empty list")
    rows: list[int] = []
    offset = 0
    for p in parts:
        rows.extend(r << offset for r in p.rows)
        offset += p.order
    return Graph(offset, tuple(rows))


def join(parts: list[Graph]) -> Graph:
    """Chain join: disjoint union plus all edges between consecutive parts.

    Only consecutive parts are connected; an all-pairs join is expressible
    by nesting.  join([K1, M, K2]) therefore leaves the K1 vertex and the
    K2 vertices non-adjacent, which several constructions depend on.
    """
    g = disjoint_union(parts)
    rows = list(g.rows)
    offsets = []
    off = 0
    for p in parts:
        offsets.append(off)
        off += p.order
    for i in range(len(parts) - 1):
        a0, a1 = offsets[i], offsets[i] + parts[i].order
        b0, b1 = offsets[i + 1], offsets[i + 1] + parts[i + 1].order
        bmask = ((1 << (b1 - b0)) - 1) << b0
        amask = ((1 << (a1 - a0)) - 1) << a0
        for u in range(a0, a1):
            rows[u] |= bmask
        for v in range(b0, b1):
            rows[v] |= amask
    return Graph(g.order, tuple(rows))


def components(g: Graph) -> list[Component]:
    """Maximal connected pieces, ordered by minimum original label.

    Each piece is returned relabeled 0..k-1 together with the tuple of
    original labels (position i holds the original label of new vertex i).
    """
    seen = 0
    out: list[Component] = []
    for start in range(g.order):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        labels = tuple(bits_of(comp))
        out.append(Component(g.subgraph(labels), labels))
    return out


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~comp
        comp |= nxt
    return comp == (1 << g.order) - 1


def classify_degrees(g: Graph) -> DegreeClassification:
    """Classify the degree multiset: regular, nearly regular, or neither.

    Nearly regular means exactly one vertex of degree max-1 and all others
    of degree max.
    """
    degs = g.degrees()
    if not degs:
        return DegreeClassification(0, True, False, None)
    dmax = max(degs)
    regular = all(d == dmax for d in degs)
    deficient = [u for u, d in enumerate(degs) if d == dmax - 1]
    nearly = (not regular) and len(deficient) == 1 and all(
        d in (dmax, dmax - 1) for d in degs
    )
    return DegreeClassification(
        max_degree=dmax,
        is_regular=regular,
        is_nearly_regular=nearly,
        deficient_vertex=deficient[0] if nearly else None,
    )
