"""Pure-Python reference implementations of the combinatorial hot kernels.

The compiled module (oddwheel._kernels) mirrors these functions bit for
bit; kernels.py selects whichever is available at import.  Rows are
adjacency bitmasks, so this module works for any order; the compiled one
is limited to 64-bit masks and the dispatcher routes accordingly.

Canonical form
--------------
The canonical code of a graph is the lexicographically minimal adjacency
bit-string over all vertex orderings, reading the upper triangle in
column-major order: bits (0,1), (0,2), (1,2), (0,3), ... (the same bit
order graph6 uses).  Column-major reading makes the string decomposable
into per-position contributions: placing a vertex at position j fixes
exactly the bits (i,j) for i<j, so the minimum can be found level by
level.

At each level the search keeps every partial placement achieving the
minimal prefix (a frontier), because prefix-tied placements may differ
later.  Two placements with the same used set and identical pending
contributions for every unplaced vertex are interchangeable from that
point on, which is what the dedup signature captures; without it the
frontier blows up factorially on vertex-transitive graphs.
"""

from __future__ import annotations


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canon_code(n: int, rows) -> bytes:
    """Canonical form as bytes: order byte, then the packed minimal
    upper-triangle bit-string (big-endian, zero-padded)."""
    if n > 255:
        raise ValueError("canonical form limited to order <= 255")
    if n <= 1:
        return bytes([n])
    total_bits = n * (n - 1) // 2

    # Frontier entries: (placed tuple, used mask, contribs) where
    # contribs[v] is the bit-int of v's adjacencies to the placed prefix
    # (first-placed vertex most significant), for every unplaced v.
    entries = []
    for v in range(n):
        contribs = {w: (rows[w] >> v) & 1 for w in range(n) if w != v}
        entries.append(((v,), 1 << v, contribs))
    entries = _dedup(entries)

    code = 0
    for pos in range(1, n):
        best = -1
        chosen = []
        for placed, used, contribs in entries:
            for v, c in contribs.items():
                if best < 0 or c < best:
                    best = c
                    chosen = [(placed, used, contribs, v)]
                elif c == best:
                    chosen.append((placed, used, contribs, v))
        code = (code << pos) | best
        nxt = []
        for placed, used, contribs, v in chosen:
            rv = rows[v]
            new_contribs = {
                w: (c << 1) | ((rv >> w) & 1)
                for w, c in contribs.items()
                if w != v
            }
            nxt.append((placed + (v,), used | (1 << v), new_contribs))
        entries = _dedup(nxt)
        if len(entries) > 1_000_000:
            raise RuntimeError(
                "canonical-form frontier explosion; canonicalize per "
                "component instead of the whole graph"
            )
    return bytes([n]) + code.to_bytes((total_bits + 7) // 8, "big")


def _dedup(entries):
    seen = {}
    for e in entries:
        _, used, contribs = e
        key = (used, tuple(sorted(contribs.items())))
        if key not in seen:
            seen[key] = e
    return list(seen.values())


def pack_code(n: int, rows) -> bytes:
    """Pack a labeled graph into the code format without re-minimizing:
    order byte + column-major upper-triangle bits, big-endian."""
    if n > 255:
        raise ValueError("code format limited to order <= 255")
    if n <= 1:
        return bytes([n])
    total_bits = n * (n - 1) // 2
    code = 0
    for j in range(1, n):
        for i in range(j):
            code = (code << 1) | ((rows[i] >> j) & 1)
    return bytes([n]) + code.to_bytes((total_bits + 7) // 8, "big")


def code_to_rows(code: bytes) -> tuple[int, tuple[int, ...]]:
    """Rebuild the canonically labeled adjacency rows from a code."""
    n = code[0]
    rows = [0] * n
    if n <= 1:
        return n, tuple(rows)
    total_bits = n * (n - 1) // 2
    val = int.from_bytes(code[1:], "big")
    shift = total_bits
    for j in range(1, n):
        for i in range(j):
            shift -= 1
            if (val >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return n, tuple(rows)


def has_cycle_of_length(n: int, rows, length: int, budget: int) -> int:
    """1 if some cycle on exactly `length` vertices exists, 0 if none,
    -1 if the node-expansion budget ran out first.

    Exact backtracking over simple paths.  Each cycle is sought with its
    minimum vertex as the anchor, so every other vertex on the path is
    restricted to higher labels.  Vertices outside the 2-core cannot lie
    on any cycle and are dropped first.
    """
    if length < 3 or length > n:
        return 0
    alive = (1 << n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (alive >> v) & 1 and (rows[v] & alive).bit_count() < 2:
                alive ^= 1 << v
                changed = True
    if alive.bit_count() < length:
        return 0
    ops = 0
    for s in _bits(alive):
        gt = alive & ~((1 << (s + 1)) - 1)
        rs = rows[s]
        if (rs & gt).bit_count() < 2:
            continue
        frames = [[s, rows[s] & gt]]
        used = 1 << s
        while frames:
            v, m = frames[-1]
            if len(frames) == length - 1:
                if m & rs:
                    return 1
                frames.pop()
                used &= ~(1 << v)
                continue
            if m == 0:
                frames.pop()
                used &= ~(1 << v)
                continue
            low = m & -m
            frames[-1][1] = m ^ low
            ops += 1
            if 0 <= budget < ops:
                return -1
            w = low.bit_length() - 1
            used |= low
            frames.append([w, rows[w] & gt & ~used])
    return 0


def longest_path_order(n: int, rows, budget: int) -> int:
    """Maximum number of vertices on a simple path (-1 on budget
    exhaustion).  Backtracking with a reachability upper bound: a partial
    path cannot beat the incumbent if even absorbing every vertex still
    reachable from its tip falls short."""
    if n == 0:
        return 0
    best = 1
    full = (1 << n) - 1
    ops = 0
    for s in range(n):
        frames = [[s, rows[s]]]
        used = 1 << s
        while frames:
            v, m = frames[-1]
            if m == 0:
                frames.pop()
                used &= ~(1 << v)
                continue
            low = m & -m
            frames[-1][1] = m ^ low
            ops += 1
            if 0 <= budget < ops:
                return -1
            avail = full & ~used
            reach = low
            frontier = low
            while frontier:
                nb = 0
                for x in _bits(frontier):
                    nb |= rows[x]
                frontier = nb & avail & ~reach
                reach |= frontier
            if len(frames) + reach.bit_count() <= best:
                continue
            w = low.bit_length() - 1
            used |= low
            frames.append([w, rows[w] & ~used])
            if len(frames) > best:
                best = len(frames)
                if best == n:
                    return best
    return best
