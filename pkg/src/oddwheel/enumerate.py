"""Isomorph-free exhaustive graph enumeration (canonical augmentation).

Graphs are generated by adding one vertex at a time.  A child built from a
parent by attaching a new vertex v is kept only when deleting v leaves the
same canonical form as deleting the top-labeled vertex of the child's
canonical copy.  Children of one parent are deduped by canonical form;
across parents the deletion rule guarantees each isomorphism class appears
exactly once, because accepted parents are forced isomorphic to the
child's canonical-deletion graph.

Degree-constrained enumeration (regular and one-deficient-vertex targets)
prunes partial graphs that cannot reach the target: the prune conditions
are isomorphism-invariant and hold along every deletion path of a valid
final graph, which is what completeness requires.
"""

from __future__ import annotations

from oddwheel import kernels
from oddwheel.graphs import Graph, is_connected


class BudgetExceededError(RuntimeError):
    """Search or enumeration exceeded its node-expansion budget."""


_deletion_cache: dict[bytes, bytes] = {}
_all_cache: dict[int, list[bytes]] = {}
_degree_cache: dict[tuple[int, int, bool], list[Graph]] = {}


def _canon_graph(code: bytes) -> Graph:
    n, rows = kernels.code_to_rows(code)
    return Graph(n, tuple(rows))


def graph_code(g: Graph) -> bytes:
    """Canonical form: order byte + packed canonical bit-string.

    Connected graphs get the lexicographically minimal bit-string over all
    vertex orderings.  Disconnected graphs are canonicalized per component
    and reassembled with the component codes sorted; minimizing over all
    orderings at once would interleave components through their
    independent sets and blow up combinatorially, and the per-component
    form is the same complete isomorphism invariant either way.
    """
    from oddwheel.graphs import components  # local import breaks a cycle

    comps = components(g)
    if len(comps) <= 1:
        return kernels.canon_code(g.order, list(g.rows))
    pieces = sorted(
        kernels.canon_code(c.graph.order, list(c.graph.rows)) for c in comps
    )
    rows: list[int] = []
    offset = 0
    for piece in pieces:
        m, sub = kernels.code_to_rows(piece)
        rows.extend(r << offset for r in sub)
        offset += m
    return kernels.pack_code(offset, rows)


def _deletion_code(child_code: bytes) -> bytes:
    """Canonical form after deleting the top-labeled vertex of the
    canonical copy.  Cached: the value depends on the class alone."""
    k = _deletion_cache.get(child_code)
    if k is None:
        n, rows = kernels.code_to_rows(child_code)
        top = 1 << (n - 1)
        sub = [rows[i] & ~top for i in range(n - 1)]
        k = kernels.canon_code(n - 1, sub)
        _deletion_cache[child_code] = k
    return k


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int | None):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        if self.left is None:
            return
        self.left -= amount
        if self.left < 0:
            raise BudgetExceededError("enumeration budget exhausted")


def _children(
    parent_code: bytes,
    allowed_mask_fn,
    child_ok,
    budget: _Budget,
) -> list[bytes]:
    n, rows = kernels.code_to_rows(parent_code)
    rows = list(rows)
    allowed = allowed_mask_fn(n, rows)
    seen: set[bytes] = set()
    out: list[bytes] = []
    sub = allowed
    while True:
        s = sub
        child = rows + [s]
        for v in range(n):
            if (s >> v) & 1:
                child[v] |= 1 << n
        if child_ok(n + 1, child):
            budget.spend()
            code = kernels.canon_code(n + 1, child)
            if code not in seen:
                seen.add(code)
                if _deletion_code(code) == parent_code:
                    out.append(code)
        if sub == 0:
            break
        sub = (sub - 1) & allowed
    return out


def all_graphs(n: int, budget: int | None = None) -> list[Graph]:
    """Every isomorphism class of simple graphs on exactly n vertices,
    ordered by canonical form."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return [Graph(0, ())]
    b = _Budget(budget)
    top = max(k for k in _all_cache) if _all_cache else 0
    if not _all_cache:
        _all_cache[1] = [kernels.canon_code(1, [0])]
        top = 1
    for m in range(top, n):
        codes: list[bytes] = []
        for pcode in _all_cache[m]:
            codes.extend(
                _children(
                    pcode,
                    lambda k, rows: (1 << k) - 1,
                    lambda k, rows: True,
                    b,
                )
            )
        _all_cache[m + 1] = sorted(codes)
    return [_canon_graph(c) for c in _all_cache[n]]


def graph_class_count(n: int) -> int:
    return len(all_graphs(n))


def connected_with_degrees(
    order: int, d: int, deficient: bool, budget: int | None = None
) -> list[Graph]:
    """Connected graphs on `order` vertices in which every vertex has
    degree d, except (when deficient) exactly one vertex of degree d-1.

    Ordered by canonical form.  Infeasible parameters give an empty list.
    """
    if order < 0 or d < 0:
        raise ValueError("order and degree must be non-negative")
    key = (order, d, deficient)
    cached = _degree_cache.get(key)
    if cached is not None:
        return list(cached)

    if order == 0:
        _degree_cache[key] = []
        return []
    targets = ([d - 1] if deficient else []) + [d] * (order - (1 if deficient else 0))
    if sum(targets) % 2 or min(targets) < 0 or max(targets) > order - 1:
        _degree_cache[key] = []
        return []

    def prune(m: int, rows: list[int]) -> bool:
        r = order - m
        over = 0
        slack_used = 0
        deficit_sum = 0
        for row in rows:
            deg = row.bit_count()
            if deg > d:
                return False
            gap = d - deg
            deficit_sum += gap
            if gap > r:
                if deficient and gap == r + 1 and not slack_used:
                    slack_used = 1
                else:
                    return False
        if deficit_sum - (1 if deficient else 0) > r * d:
            return False
        return True

    def allowed_mask(m: int, rows: list[int]) -> int:
        mask = 0
        for v in range(m):
            if rows[v].bit_count() < d:
                mask |= 1 << v
        return mask

    def child_ok(m: int, rows: list[int]) -> bool:
        if rows[m - 1].bit_count() > d:
            return False
        return prune(m, rows)

    b = _Budget(budget)
    level = [kernels.canon_code(1, [0])]
    for m in range(1, order):
        nxt: list[bytes] = []
        for pcode in level:
            nxt.extend(_children(pcode, allowed_mask, child_ok, b))
        level = sorted(set(nxt))
        if not level:
            break

    out = []
    want_deficient = 1 if deficient else 0
    for code in level:
        g = _canon_graph(code)
        degs = g.degrees()
        if sum(1 for x in degs if x == d - 1) != want_deficient:
            continue
        if sum(1 for x in degs if x == d) != order - want_deficient:
            continue
        if not is_connected(g):
            continue
        out.append(g)
    _degree_cache[key] = out
    return list(out)
