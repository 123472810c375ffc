"""Named graph constructions and the finite families they generate.

Covers the primitive graphs (complete, cycle, matching, empty), odd
wheels, the one-deficient core component K1 v complement(matching) v K2,
the families of (nearly) regular graphs with bounded component order, and
the bipartite-plus-embedding candidate graphs whose spectral radii the
verification harness compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from oddwheel.enumerate import connected_with_degrees, graph_code
from oddwheel.graphs import (
    Graph,
    GraphError,
    build_graph,
    complement,
    disjoint_union,
    join,
)

U_KIND = "U"
V_KIND = "V"
G_KIND = "GFAM"


def primitive(kind: str, m: int) -> Graph:
    """complete/cycle/matching/empty graph on m labeled vertices."""
    if m < 0:
        raise ValueError("order must be non-negative")
    if kind == "complete":
        return build_graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])
    if kind == "cycle":
        if m < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return build_graph(m, [(i, (i + 1) % m) for i in range(m)])
    if kind == "matching":
        if m % 2:
            raise ValueError("perfect matching needs an even order")
        return build_graph(m, [(2 * i, 2 * i + 1) for i in range(m // 2)])
    if kind == "empty":
        return build_graph(m, [])
    raise ValueError(f"unknown primitive kind {kind!r}")


def odd_wheel(k: int) -> Graph:
    """Hub joined to a cycle of order 2k; the forbidden subgraph W_{2k+1}."""
    if k < 2:
        raise ValueError("odd wheel needs k >= 2")
    return join([primitive("complete", 1), primitive("cycle", 2 * k)])


def core_component(k: int) -> Graph:
    """K1 v complement(M_{k-2}) v K2 on k+1 vertices (chain join).

    The unique vertex of degree k-2 is vertex 0; all others have degree
    k-1.  Vertex layout: 0 the hub-side single vertex, 1..k-2 the
    matching complement, k-1 and k the edge pair.
    """
    if k < 4 or k % 2:
        raise ValueError("core component needs even k >= 4")
    return join(
        [
            primitive("complete", 1),
            complement(primitive("matching", k - 2)),
            primitive("complete", 2),
        ]
    )


def circulant(m: int, d: int) -> Graph:
    """Connected d-regular circulant on m vertices (d < m; d*m even)."""
    if d >= m or d < 0 or (d * m) % 2:
        raise ValueError(f"no d-regular graph on {m} vertices for d={d}")
    edges = set()
    half = d // 2
    for v in range(m):
        for off in range(1, half + 1):
            edges.add(tuple(sorted((v, (v + off) % m))))
    if d % 2:
        for v in range(m // 2):
            edges.add(tuple(sorted((v, v + m // 2))))
    return build_graph(m, sorted(edges))


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of a finite family of (nearly) regular graphs.

    kind U: (k-1)-regular or nearly (k-1)-regular graphs in which every
    component has at most 2k-2 vertices (degree_param = k >= 3).
    kind V: nearly (k-1)-regular graphs with the core component fixed to
    core_component(k) (degree_param = k >= 4 even, order odd).
    kind GFAM: graphs with all degrees Delta except one vertex of degree
    Delta-1 and components of order at most 2*Delta (degree_param =
    Delta odd >= 3, order odd >= 3*Delta+4).
    """

    kind: str
    degree_param: int
    order: int

    def validate(self) -> None:
        k = self.degree_param
        n = self.order
        if self.kind == U_KIND:
            if k < 3:
                raise ValueError("U family needs degree_param >= 3")
        elif self.kind == V_KIND:
            if k < 4 or k % 2:
                raise ValueError("V family needs even degree_param >= 4")
            if n % 2 == 0 or n < k + 1:
                raise ValueError("V family needs odd order >= degree_param+1")
        elif self.kind == G_KIND:
            if k < 3 or k % 2 == 0:
                raise ValueError("GFAM needs odd degree_param >= 3")
            if n % 2 == 0 or n < 3 * k + 4:
                raise ValueError("GFAM needs odd order >= 3*degree_param+4")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if n < 1:
            raise ValueError("order must be positive")


def _regular_component_orders(d: int) -> list[int]:
    # d-regular components of order m exist iff d*m even and m >= d+1;
    # the families cap components at 2d vertices.
    return [m for m in range(d + 1, 2 * d + 1) if (d * m) % 2 == 0]


def _deficient_component_orders(d: int) -> list[int]:
    # one vertex of degree d-1, the rest of degree d; degree sum parity
    # forces d and the order both odd.
    if d % 2 == 0:
        return []
    return [q for q in range(d + 1, 2 * d + 1) if q % 2 == 1]


def _order_partitions(total: int, orders: list[int]) -> list[tuple[int, ...]]:
    """Multisets (non-increasing tuples) of allowed orders summing to total."""
    orders = sorted(orders, reverse=True)
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, idx: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(idx, len(orders)):
            m = orders[i]
            if m <= remaining:
                acc.append(m)
                rec(remaining - m, i, acc)
                acc.pop()

    rec(total, 0, [])
    return out


def _regular_multisets(
    total: int, d: int, budget: int | None = None
) -> list[list[Graph]]:
    """All multisets of connected d-regular components (orders <= 2d)
    covering `total` vertices, one list of Graphs per multiset."""
    if total == 0:
        return [[]]
    out: list[list[Graph]] = []
    for part in _order_partitions(total, _regular_component_orders(d)):
        counts: dict[int, int] = {}
        for m in part:
            counts[m] = counts.get(m, 0) + 1
        per_order = []
        feasible = True
        for m, c in sorted(counts.items()):
            pool = connected_with_degrees(m, d, False, budget=budget)
            if not pool:
                feasible = False
                break
            per_order.append(list(combinations_with_replacement(pool, c)))
        if not feasible:
            continue
        for combo in product(*per_order):
            member: list[Graph] = []
            for group in combo:
                member.extend(group)
            out.append(member)
    return out


def _assemble(deficient: Graph | None, regulars: list[Graph]) -> Graph:
    parts = ([] if deficient is None else [deficient]) + sorted(
        regulars, key=lambda g: (g.order, graph_code(g))
    )
    return disjoint_union(parts)


def enumerate_family(spec: FamilySpec, budget: int | None = None) -> list[Graph]:
    """All family members up to isomorphism, ordered by canonical form.

    Parameters that simply admit no member give an empty list; invalid
    FamilySpec combinations raise ValueError.
    """
    spec.validate()
    n = spec.order
    members: list[Graph] = []

    if spec.kind == V_KIND:
        k = spec.degree_param
        core = core_component(k)
        if n >= core.order:
            for regs in _regular_multisets(n - core.order, k - 1, budget):
                members.append(_assemble(core, regs))
    else:
        d = spec.degree_param - 1 if spec.kind == U_KIND else spec.degree_param
        cap = 2 * d  # components of U stop at 2k-2 = 2d; GFAM at 2*Delta = 2d
        if (d * n) % 2 == 0:
            if spec.kind == G_KIND:
                return []  # degree sum n*d-1 would be odd
            for regs in _regular_multisets(n, d, budget):
                members.append(_assemble(None, regs))
        else:
            for q in _deficient_component_orders(d):
                if q > min(n, cap):
                    continue
                for dg in connected_with_degrees(q, d, True, budget=budget):
                    for regs in _regular_multisets(n - q, d, budget):
                        members.append(_assemble(dg, regs))

    members.sort(key=graph_code)
    return members


@dataclass(frozen=True)
class CandidateSpec:
    """A complete bipartite graph K_{|L|,|R|} with a family member embedded
    in L and (optionally) one edge embedded in R, where |L| = n/2 + s.

    Vertices 0..|L|-1 form L (inner keeps its labels), |L|..n-1 form R;
    the R edge, when present, connects the first two R vertices.
    """

    n: int
    k: int
    s: int
    inner: Graph
    r_edge: bool

    def left_size(self) -> int:
        return self.n // 2 + self.s


def bipartite_candidate(
    n: int, left: int, inner: Graph, r_edge: bool
) -> Graph:
    """Low-level builder used by spex_candidate and the odd-n sweeps."""
    right = n - left
    if left <= 0 or right <= 0:
        raise ValueError("both sides must be non-empty")
    if inner.order != left:
        raise GraphError(
            f"inner graph has order {inner.order}, expected |L| = {left}"
        )
    if r_edge and right < 2:
        raise ValueError("R edge needs at least two right vertices")
    l_mask = (1 << left) - 1
    r_mask = ((1 << right) - 1) << left
    rows = [0] * n
    for v in range(left):
        rows[v] = r_mask | inner.rows[v]
    for v in range(left, n):
        rows[v] = l_mask
    if r_edge:
        rows[left] |= 1 << (left + 1)
        rows[left + 1] |= 1 << left
    return Graph(n, tuple(rows))


def spex_candidate(spec: CandidateSpec) -> Graph:
    if spec.n % 2:
        raise ValueError(
            "spex_candidate uses |L| = n/2 + s; build odd orders through "
            "bipartite_candidate with an explicit left size"
        )
    return bipartite_candidate(spec.n, spec.left_size(), spec.inner, spec.r_edge)


def matching_embedded_candidate(n: int) -> Graph:
    """The k=2 extremal candidate: complete bipartite plus a maximum
    matching embedded in each side (|L| = n/2+1 when n = 2 mod 4,
    otherwise |L| = ceil(n/2))."""
    if n < 4:
        raise ValueError("candidate needs at least 4 vertices")
    left = n // 2 + 1 if n % 4 == 2 else (n + 1) // 2
    right = n - left
    edges = [(i, j) for i in range(left) for j in range(left, n)]
    edges += [(2 * i, 2 * i + 1) for i in range(left // 2)]
    edges += [(left + 2 * i, left + 2 * i + 1) for i in range(right // 2)]
    return build_graph(n, edges)


def auto_left_sizes(n: int, k: int) -> list[int]:
    """Candidate side sizes |L| for the extremal graphs, by residue of n.

    For even k >= 4 and n = 2 mod 4 two sizes compete (n/2 carrying a
    nearly regular embedding, n/2+1 a regular one); every other case pins
    a single size.
    """
    if k < 2:
        raise ValueError("k >= 2 required")
    if k == 2:
        return [n // 2 + 1] if n % 4 == 2 else [(n + 1) // 2]
    if k % 2 == 1:
        return [(n + 1) // 2]
    if n % 4 == 0:
        return [n // 2]
    if n % 4 == 1:
        return [n // 2]
    if n % 4 == 2:
        return [n // 2, n // 2 + 1]
    return [(n + 1) // 2]


def regular_filler(total: int, d: int) -> list[Graph]:
    """Deterministic multiset of connected d-regular circulant components
    with orders in [d+1, 2d] covering `total` vertices (empty list for
    total 0); raises when no decomposition exists."""
    if total == 0:
        return []
    orders = _regular_component_orders(d)
    # Small DP over achievable totals keeps the choice deterministic.
    reach: dict[int, tuple[int, ...]] = {0: ()}
    for t in range(1, total + 1):
        for m in orders:
            if m <= t and (t - m) in reach:
                reach[t] = reach[t - m] + (m,)
                break
        # unreachable totals simply stay absent
    if total not in reach:
        raise ValueError(
            f"{total} vertices cannot be covered by {d}-regular components"
        )
    return [circulant(m, d) for m in reach[total]]


def standard_member(kind: str, k: int, order: int) -> Graph:
    """One deterministic family member without full enumeration; used for
    large candidate constructions where any member serves."""
    if kind == V_KIND:
        core = core_component(k)
        if order % 2 == 0 or order < core.order:
            raise ValueError("V member needs odd order >= k+1")
        return _assemble(core, regular_filler(order - core.order, k - 1))
    if kind == U_KIND:
        d = k - 1
        if (d * order) % 2 == 0:
            return _assemble(None, regular_filler(order, d))
        core = core_component(k)
        if order < core.order:
            raise ValueError("no nearly-regular member this small")
        return _assemble(core, regular_filler(order - core.order, d))
    raise ValueError("standard_member supports kinds U and V")
