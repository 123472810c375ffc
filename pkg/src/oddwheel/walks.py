"""Exact walk counting, the walk-count order, and iterated maximizer
selection over finite families.

All counts are exact Python integers: totals grow like radius**level and
overflow any fixed width well inside desk scale, and the lexicographic
order the selection rests on does not survive a single rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from oddwheel.graphs import Graph, bits_of, classify_degrees, components


@dataclass(frozen=True)
class WalkProfile:
    """Totals W^1..W^L of walks of each length, all starting vertices."""

    counts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.counts)


class Relation(Enum):
    SUCC = "SUCC"
    EQUIV = "EQUIV"
    PREC = "PREC"


@dataclass(frozen=True)
class OrderResult:
    relation: Relation
    witness_level: int | None


def vertex_walks(g: Graph, levels: int) -> list[tuple[int, ...]]:
    """Per-vertex walk counts: entry [l-1][u] is the number of walks of
    length l starting at u (length-1 counts are the degrees)."""
    if levels < 1:
        raise ValueError("levels >= 1 required")
    cur = [1] * g.order
    out = []
    for _ in range(levels):
        nxt = [0] * g.order
        for u in range(g.order):
            total = 0
            for v in bits_of(g.rows[u]):
                total += cur[v]
            nxt[u] = total
        out.append(tuple(nxt))
        cur = nxt
    return out


def walk_profile(g: Graph, levels: int) -> WalkProfile:
    """Graph totals W^1..W^levels, cross-checked through the splitting
    identity W^l = sum_u w^i(u) * w^(l-i)(u) at i = l // 2."""
    table = vertex_walks(g, levels)
    counts = tuple(sum(row) for row in table)
    for level in range(2, levels + 1):
        i = level // 2
        split = sum(
            table[i - 1][u] * table[level - i - 1][u] for u in range(g.order)
        )
        if split != counts[level - 1]:
            raise RuntimeError(
                f"walk count self-check failed at level {level}: "
                f"{split} != {counts[level - 1]}"
            )
    return WalkProfile(counts)


def closed_form_profile(
    delta: int, n: int, q: int, e12: int, sum_d2sq: int, sum_d1sq: int
) -> tuple[int, int, int, int, int, int]:
    """W^1..W^6 for a graph of order n whose vertices all have degree
    delta except one of degree delta-1, whose deficient component has
    order q and diameter 2.

    N1/N2 are the distance classes from the deficient vertex inside its
    component; e12 counts edges between them, sum_d2sq is the sum over N1
    of squared neighbor counts into N2, sum_d1sq the sum over N2 of
    squared neighbor counts into N1.  Levels 1-4 need none of that
    structure; level 5 subtracts e12 and level 6 brings in the square
    sums.
    """
    if delta < 3 or delta % 2 == 0:
        raise ValueError("delta must be odd and >= 3")
    if q % 2 == 0 or not (delta + 2 <= q <= 2 * delta - 1):
        raise ValueError("deficient component order q must be odd in "
                         f"[delta+2, 2*delta-1], got {q}")
    if n < q:
        raise ValueError("total order n below component order q")
    n2 = q - delta
    lower = max(n2 * (delta + 1 - n2), 2 * (delta - 1))
    if e12 < lower:
        raise ValueError(f"e12={e12} below its lower bound {lower}")
    if e12 > (delta - 1) * n2:
        raise ValueError(f"e12={e12} above |N1|*|N2|")
    d = delta
    w1 = n * d - 1
    w2 = (n - 1) * d * d + (d - 1) ** 2
    w3 = n * d**3 - 3 * d * d + 2 * d
    w4 = n * d**4 - 4 * d**3 + 3 * d * d + d - 1
    w5 = (
        (n - d) * d**5
        + d * (d + 1) * (d - 1) ** 3
        + (d * d - 1) * (d - 1) * (d**3 - 2 * d + 1)
        - e12
    )
    w6 = (
        (n - d) * d**6
        + (d - 1) ** 2 * (d * d - 1) ** 2
        + (d - 1) * (d**3 - 2 * d + 1) ** 2
        - (4 * d - 2) * e12
        + sum_d2sq
        + sum_d1sq
    )
    return (w1, w2, w3, w4, w5, w6)


@dataclass(frozen=True)
class DeficientStructure:
    q: int
    e12: int
    sum_d2sq: int
    sum_d1sq: int


def extract_deficient_structure(g: Graph) -> DeficientStructure:
    """Locate the unique vertex of degree max-1, take its component, and
    measure the N1/N2 structure that the closed forms consume.  Errors
    when the graph is not of the expected one-deficient-vertex shape or
    the component has diameter above 2."""
    cls = classify_degrees(g)
    if not cls.is_nearly_regular or cls.deficient_vertex is None:
        raise ValueError("graph has no unique deficient vertex")
    comp = next(
        c for c in components(g) if cls.deficient_vertex in c.labels
    )
    sub = comp.graph
    u = comp.labels.index(cls.deficient_vertex)
    n1_mask = sub.rows[u]
    all_mask = (1 << sub.order) - 1
    n2_mask = all_mask & ~n1_mask & ~(1 << u)
    for v in bits_of(n2_mask):
        if not (sub.rows[v] & n1_mask):
            raise ValueError("deficient component has diameter above 2")
    e12 = sum((sub.rows[v] & n2_mask).bit_count() for v in bits_of(n1_mask))
    sum_d2sq = sum(
        (sub.rows[v] & n2_mask).bit_count() ** 2 for v in bits_of(n1_mask)
    )
    sum_d1sq = sum(
        (sub.rows[v] & n1_mask).bit_count() ** 2 for v in bits_of(n2_mask)
    )
    return DeficientStructure(sub.order, e12, sum_d2sq, sum_d1sq)


def default_horizon(*graphs: Graph) -> int:
    """Comparison horizon 2 * max order.  Walk totals obey a linear
    recurrence of order at most n (from the characteristic polynomial of
    the adjacency matrix), so two graphs of order <= n whose totals agree
    through 2n agree forever."""
    return 2 * max((g.order for g in graphs), default=1)


def walk_compare(g1: Graph, g2: Graph, levels: int | None = None) -> OrderResult:
    """Lexicographic comparison of walk profiles through `levels`
    (default: the shared horizon 2 * max order)."""
    if levels is None:
        levels = default_horizon(g1, g2)
    if levels < 1:
        raise ValueError("levels >= 1 required")
    p1 = walk_profile(g1, levels).counts
    p2 = walk_profile(g2, levels).counts
    for i, (a, b) in enumerate(zip(p1, p2), start=1):
        if a > b:
            return OrderResult(Relation.SUCC, i)
        if a < b:
            return OrderResult(Relation.PREC, i)
    return OrderResult(Relation.EQUIV, None)


@dataclass(frozen=True)
class ExInfinityTrace:
    survivors: tuple[Graph, ...]
    stabilization_level: int
    survivor_counts: tuple[int, ...]


def ex_infinity_trace(
    family: list[Graph], levels: int | None = None
) -> ExInfinityTrace:
    """Iterated walk-total maximizer selection: at each level keep the
    members maximizing W^level among the current survivors, through
    `levels` (default horizon 2 * max order).  Records the last level at
    which the survivor set shrank."""
    if not family:
        raise ValueError("family must be non-empty")
    if levels is None:
        levels = default_horizon(*family)
    profiles = [walk_profile(g, levels).counts for g in family]
    alive = list(range(len(family)))
    stabilized = 0
    counts = []
    for level in range(1, levels + 1):
        best = max(profiles[i][level - 1] for i in alive)
        nxt = [i for i in alive if profiles[i][level - 1] == best]
        if len(nxt) != len(alive):
            stabilized = level
        alive = nxt
        counts.append(len(alive))
    return ExInfinityTrace(
        survivors=tuple(family[i] for i in alive),
        stabilization_level=stabilized,
        survivor_counts=tuple(counts),
    )


def ex_infinity(family: list[Graph], levels: int | None = None) -> list[Graph]:
    return list(ex_infinity_trace(family, levels).survivors)
