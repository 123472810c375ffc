"""Compiled and pure kernels must agree bit for bit; both must agree with
brute-force oracles at small orders."""

import itertools
import random

import pytest

from oddwheel import _kernels_py, kernels


def random_rows(rng, n, p):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def brute_min_code(n, rows):
    """Minimal column-major upper-triangle bit-string over all orders."""
    if n <= 1:
        return bytes([n])
    best = None
    for perm in itertools.permutations(range(n)):
        code = 0
        for j in range(1, n):
            for i in range(j):
                code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1)
        if best is None or code < best:
            best = code
    total = n * (n - 1) // 2
    return bytes([n]) + best.to_bytes((total + 7) // 8, "big")


def brute_has_cycle(n, rows, length):
    for sub in itertools.combinations(range(n), length):
        first = sub[0]
        for perm in itertools.permutations(sub[1:]):
            seq = (first,) + perm
            if all(
                (rows[seq[i]] >> seq[(i + 1) % length]) & 1
                for i in range(length)
            ):
                return 1
    return 0


def brute_longest_path(n, rows):
    best = 1 if n else 0
    for k in range(2, n + 1):
        found = any(
            all((rows[seq[i]] >> seq[i + 1]) & 1 for i in range(k - 1))
            for seq in itertools.permutations(range(n), k)
        )
        if not found:
            break
        best = k
    return best


def test_pure_matches_brute_canon():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(0, 6)
        rows = random_rows(rng, n, rng.choice([0.2, 0.5, 0.8]))
        assert _kernels_py.canon_code(n, rows) == brute_min_code(n, rows)


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="no compiled kernels")
def test_compiled_matches_pure_canon():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(0, 9)
        rows = random_rows(rng, n, rng.random())
        assert kernels.canon_code(n, rows) == _kernels_py.canon_code(n, rows)


def test_canon_invariant_under_relabeling():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(2, 8)
        rows = random_rows(rng, n, 0.5)
        perm = list(range(n))
        rng.shuffle(perm)
        shuffled = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if (rows[u] >> v) & 1:
                    shuffled[perm[u]] |= 1 << perm[v]
                    shuffled[perm[v]] |= 1 << perm[u]
        assert kernels.canon_code(n, rows) == kernels.canon_code(n, shuffled)


def test_code_roundtrip():
    rng = random.Random(14)
    for _ in range(100):
        n = rng.randint(0, 9)
        rows = random_rows(rng, n, 0.4)
        code = kernels.canon_code(n, rows)
        n2, rows2 = kernels.code_to_rows(code)
        assert n2 == n
        assert kernels.canon_code(n2, list(rows2)) == code
        # pack of the canonical copy reproduces the code verbatim
        assert _kernels_py.pack_code(n2, rows2) == code


def test_cycle_kernels_match_each_other_and_brute():
    rng = random.Random(15)
    for _ in range(150):
        n = rng.randint(3, 8)
        rows = random_rows(rng, n, 0.4)
        for length in range(3, n + 1):
            expected = brute_has_cycle(n, rows, length)
            assert _kernels_py.has_cycle_of_length(n, rows, length, -1) == expected
            assert kernels.has_cycle_of_length(n, rows, length, -1) == expected


def test_path_kernels_match_each_other_and_brute():
    rng = random.Random(16)
    for _ in range(100):
        n = rng.randint(1, 7)
        rows = random_rows(rng, n, 0.4)
        expected = brute_longest_path(n, rows)
        assert _kernels_py.longest_path_order(n, rows, -1) == expected
        assert kernels.longest_path_order(n, rows, -1) == expected


def test_budget_exhaustion_is_signaled():
    # a dense graph with a tiny budget must return -1, not a wrong answer
    n = 12
    rows = [((1 << n) - 1) & ~(1 << u) for u in range(n)]
    assert _kernels_py.has_cycle_of_length(n, rows, n, 3) == -1
    assert kernels.has_cycle_of_length(n, rows, n, 3) == -1
    assert _kernels_py.longest_path_order(n, rows, 3) == -1
    assert kernels.longest_path_order(n, rows, 3) == -1


def test_budget_accounting_identical():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(4, 8)
        rows = random_rows(rng, n, 0.5)
        for budget in (1, 5, 20, 1000):
            a = _kernels_py.has_cycle_of_length(n, rows, n, budget)
            b = kernels.has_cycle_of_length(n, rows, n, budget)
            assert a == b
