import math
import random
from fractions import Fraction

import numpy as np
import pytest

from oddwheel.families import (
    CandidateSpec,
    primitive,
    spex_candidate,
    standard_member,
)
from oddwheel.graphs import build_graph, disjoint_union, join
from oddwheel.spectral import (
    SpectralError,
    balanced_partition,
    bracket_largest_root,
    char_poly,
    claim1_comparison,
    matrix_radius,
    quotient,
    spectral_radius,
    unbalanced_partition,
)


def dense_radius(g):
    a = np.zeros((g.order, g.order))
    for u in range(g.order):
        for v in range(g.order):
            if (g.rows[u] >> v) & 1:
                a[u, v] = 1.0
    return float(np.linalg.eigvalsh(a)[-1]) if g.order else 0.0


def random_graph(rng, n, p):
    return build_graph(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ],
    )


def test_named_radii():
    assert spectral_radius(primitive("complete", 5)).radius == pytest.approx(4.0, abs=1e-9)
    assert spectral_radius(primitive("cycle", 8)).radius == pytest.approx(2.0, abs=1e-9)
    k34 = build_graph(7, [(i, 3 + j) for i in range(3) for j in range(4)])
    assert spectral_radius(k34).radius == pytest.approx(math.sqrt(12), abs=1e-9)


def test_radius_matches_dense_solver():
    rng = random.Random(21)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 15), 0.5)
        res = spectral_radius(g, tol=1e-11)
        assert res.radius == pytest.approx(dense_radius(g), abs=1e-8)
        assert res.residual <= 1e-11


def test_perron_properties():
    g = primitive("cycle", 9)
    res = spectral_radius(g)
    assert max(res.perron) == pytest.approx(1.0, abs=1e-12)
    assert all(x > 0 for x in res.perron)


def test_disconnected_takes_component_max():
    g = disjoint_union([primitive("complete", 4), primitive("cycle", 5)])
    res = spectral_radius(g)
    assert res.radius == pytest.approx(3.0, abs=1e-9)
    assert "component 0" in res.note
    # vector supported on the achieving component
    assert all(x > 0 for x in res.perron[:4])
    assert all(x == 0 for x in res.perron[4:])


def test_iteration_budget_error():
    # irregular graph: the all-ones start is far from the Perron vector
    path = build_graph(12, [(i, i + 1) for i in range(11)])
    with pytest.raises(SpectralError):
        spectral_radius(path, tol=1e-13, max_iter=3)


def test_matrix_radius_closed_form_2x2():
    for left, right in [(10, 10), (7, 12), (1, 1)]:
        res = matrix_radius([[3, right], [left, 1]])
        assert res.radius == pytest.approx(
            2 + math.sqrt(1 + left * right), abs=1e-8
        )


def test_matrix_radius_diagonal_and_identity():
    assert matrix_radius(np.eye(3)).radius == pytest.approx(1.0, abs=1e-9)
    res = matrix_radius([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    assert res.radius == pytest.approx(5.0, abs=1e-8)
    assert "reducible" in res.note


def test_matrix_radius_rejects_negative():
    with pytest.raises(ValueError):
        matrix_radius([[1, -1], [0, 1]])


def test_quotient_six_classes_of_balanced_candidate():
    k, n = 4, 22
    g = spex_candidate(CandidateSpec(n, k, 0, standard_member("V", k, n // 2), True))
    qs = quotient(g, balanced_partition(k, n))
    assert qs.equitable
    h = n // 2
    want = [
        [0, k - 2, 0, 0, 2, h - 2],
        [1, k - 4, 2, 0, 2, h - 2],
        [0, k - 2, 1, 0, 2, h - 2],
        [0, 0, 0, k - 1, 2, h - 2],
        [1, k - 2, 2, h - k - 1, 1, 0],
        [1, k - 2, 2, h - k - 1, 0, 0],
    ]
    assert [[int(x) for x in row] for row in qs.matrix] == want
    # row sums equal the vertex degrees of each class
    sums = [sum(row) for row in qs.matrix]
    assert sums == [k - 2 + h, k - 1 + h, k - 1 + h, k - 1 + h, h + 1, h]


def test_quotient_three_classes_of_unbalanced_candidate():
    k, n = 4, 22
    from oddwheel.families import bipartite_candidate

    g = bipartite_candidate(n, n // 2 + 1, standard_member("U", k, n // 2 + 1), True)
    qs = quotient(g, unbalanced_partition(n))
    assert qs.equitable
    h = n // 2
    assert [[int(x) for x in row] for row in qs.matrix] == [
        [k - 1, 2, h - 3],
        [h + 1, 1, 0],
        [h + 1, 0, 0],
    ]


def test_quotient_detects_inequitable():
    c5 = primitive("cycle", 5)
    qs = quotient(c5, [[0], [1, 2, 3, 4]])
    assert not qs.equitable
    assert qs.matrix[1][0] == Fraction(2, 4)
    with pytest.raises(ValueError):
        quotient(c5, [[0, 1], [1, 2, 3, 4]])
    with pytest.raises(ValueError):
        quotient(c5, [[0], [1, 2]])


def test_equitable_quotient_shares_radius():
    k, n = 4, 22
    g = spex_candidate(CandidateSpec(n, k, 0, standard_member("V", k, n // 2), True))
    qs = quotient(g, balanced_partition(k, n))
    rq = matrix_radius(qs.matrix, tol=1e-11)
    rg = spectral_radius(g, tol=1e-11)
    assert abs(rq.radius - rg.radius) <= 1e-9


def test_char_poly_examples():
    assert char_poly([[0, 1], [1, 0]]).coefficients == (
        Fraction(-1), Fraction(0), Fraction(1),
    )
    cp = char_poly([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    assert cp.coefficients == (
        Fraction(-30), Fraction(31), Fraction(-10), Fraction(1),
    )
    with pytest.raises(ValueError):
        char_poly([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        char_poly([[0] * 13 for _ in range(13)])


def test_char_poly_against_numpy_roots():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 6)
        m = [[rng.randint(0, 4) for _ in range(n)] for _ in range(n)]
        cp = char_poly(m)
        eigs = np.linalg.eigvals(np.array(m, dtype=float))
        for lam in eigs:
            if abs(lam.imag) < 1e-9:
                val = np.polyval(
                    [float(c) for c in reversed(cp.coefficients)], lam.real
                )
                assert abs(val) < 1e-5 * max(
                    1.0, float(np.abs(eigs).max()) ** n
                )


def test_bracket_largest_root():
    cp = char_poly([[0, 1], [1, 0]])  # roots -1, 1
    lo, hi = bracket_largest_root(cp, 1.0000001, Fraction(1, 10**9))
    assert lo < 1 < hi and hi - lo <= Fraction(1, 10**9)
    with pytest.raises(SpectralError):
        # approximation above the root: the lower bracket sign check fires
        bracket_largest_root(cp, 5.0, Fraction(1, 10**9))


def test_matrix_radius_agrees_with_exact_root():
    # same comparison route the sign test uses, at one desk-scale point
    from oddwheel.families import bipartite_candidate

    n, k = 102, 4
    g = bipartite_candidate(n, n // 2 + 1, standard_member("U", k, n // 2 + 1), True)
    qs = quotient(g, unbalanced_partition(n))
    res = matrix_radius(qs.matrix, tol=1e-11)
    cp = char_poly(qs.matrix)
    lo, hi = bracket_largest_root(cp, res.radius, Fraction(1, 10**14))
    assert Fraction(res.radius) - Fraction(1, 10**8) < hi
    assert lo < Fraction(res.radius) + Fraction(1, 10**8)


def test_claim1_internal_consistency():
    res = claim1_comparison(4, 22)
    # the sign decision and the numeric radii must tell the same story
    assert res.sign_at_root != 0
    if res.sign_at_root < 0:
        assert res.radius1 > res.radius2
    else:
        assert res.radius1 < res.radius2
    with pytest.raises(ValueError):
        claim1_comparison(5, 22)
    with pytest.raises(ValueError):
        claim1_comparison(4, 24)


def test_edge_addition_increases_radius():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(4, 12)
        g = random_graph(rng, n, 0.5)
        from oddwheel.graphs import is_connected

        if not is_connected(g):
            continue
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        ]
        if not non_edges:
            continue
        g2 = g.add_edges([rng.choice(non_edges)])
        assert spectral_radius(g2).radius > spectral_radius(g).radius + 1e-10


def test_join_bound_small_sample():
    rng = random.Random(33)
    for _ in range(30):
        h1 = random_graph(rng, rng.randint(1, 12), 0.5)
        h2 = random_graph(rng, rng.randint(1, 12), 0.5)
        joined = join([h1, h2])
        bound = matrix_radius(
            [[h1.max_degree(), h2.order], [h1.order, h2.max_degree()]]
        ).radius
        assert spectral_radius(joined).radius <= bound + 1e-9


def test_core_quotient_note_mentions_computed_entry():
    from oddwheel.spectral import core_quotient_note

    note = core_quotient_note(6)
    assert "2" in note and "k-4" in note
