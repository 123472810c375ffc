"""Verification harness: every checkable claim becomes an executable job
emitting a structured report.

Reports never guess: FAIL carries a replayable counterexample, BUDGET
means the search ran out before deciding, and finite-size checks of
asymptotic statements are labeled as trend observations in the notes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from oddwheel.detect import (
    contains_odd_wheel,
    longest_path_order,
)
from oddwheel.enumerate import (
    BudgetExceededError,
    all_graphs,
    connected_with_degrees,
    graph_code,
)
from oddwheel.families import (
    CandidateSpec,
    FamilySpec,
    G_KIND,
    U_KIND,
    V_KIND,
    auto_left_sizes,
    bipartite_candidate,
    enumerate_family,
    primitive,
    spex_candidate,
    standard_member,
)
from oddwheel.formats import encode_graph6
from oddwheel.graphs import Graph, build_graph, join
from oddwheel.spectral import (
    balanced_partition,
    claim1_comparison,
    core_quotient_note,
    matrix_radius,
    quotient,
    spectral_radius,
)
from oddwheel.walks import Relation, ex_infinity_trace, walk_compare, walk_profile

PASS = "PASS"
FAIL = "FAIL"
BUDGET = "BUDGET"

CLAIMS = {
    "lemma-3.2": "connected graphs with all degrees D except at most one "
    "of degree D-1 and order >= 2D+1 contain a path of order 2D+1",
    "lemma-3.3": "iterated walk-count maximizers of the one-deficient "
    "bounded-component family are exactly the fixed-core family",
    "thm-3.1": "embedding walk-ordered graphs into a dominated independent "
    "set orders the spectral radii the same way",
    "spex-structure": "predicted bipartite-plus-embedding candidates attain "
    "the maximum spectral radius among the side-size sweep",
    "claim-1-thm-1.4": "6-class quotient of the balanced candidate beats "
    "the 3-class quotient of the unbalanced one",
    "fact-1": "constructed candidates exceed the radius lower bound "
    "(k-1+sqrt((k-1)^2+n^2-1))/2 + 1/(2n)",
    "lemma-2.1": "the spectral radius of a chain join is at most the Perron "
    "root of the 2x2 degree/size bound matrix",
    "brute-spex": "finite-n exhaustive maximizer of the spectral radius "
    "among odd-wheel-free graphs",
}


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    parameters: dict
    outcome: str
    evidence: dict = field(default_factory=dict)
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "parameters": _plain(self.parameters),
            "outcome": self.outcome,
            "evidence": _plain(self.evidence),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Graph):
        return encode_graph6(value)
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


def verify_bounded_order(
    delta: int, order_cap: int, budget: int | None = None
) -> VerificationReport:
    """Exhaustively check the long-path guarantee on every connected
    regular / one-deficient graph up to order_cap."""
    if delta < 2:
        raise ValueError("delta >= 2 required")
    if order_cap > 12:
        raise ValueError("order_cap above desk scale (12)")
    params = {"delta": delta, "order_cap": order_cap}
    target = 2 * delta + 1
    checked = 0
    counts: dict[int, int] = {}
    min_path = None
    try:
        for order in range(1, order_cap + 1):
            graphs = connected_with_degrees(order, delta, False, budget)
            graphs += connected_with_degrees(order, delta, True, budget)
            counts[order] = len(graphs)
            if order < target:
                continue
            for g in graphs:
                path = longest_path_order(g)
                checked += 1
                if min_path is None or path < min_path:
                    min_path = path
                if path < target:
                    return VerificationReport(
                        "lemma-3.2",
                        params,
                        FAIL,
                        {
                            "counterexample": g,
                            "path_order": path,
                            "required": target,
                        },
                        "counterexample replayable through longest_path_order",
                    )
    except BudgetExceededError as exc:
        return VerificationReport(
            "lemma-3.2", params, BUDGET, {"checked": checked}, str(exc)
        )
    notes = "" if checked else "vacuous: no instance reaches order 2*delta+1"
    return VerificationReport(
        "lemma-3.2",
        params,
        PASS,
        {
            "checked": checked,
            "class_counts": counts,
            "min_path_order": min_path,
            "required": target,
        },
        notes,
    )


def verify_walk_lemma(
    delta: int, n: int, budget: int | None = None
) -> VerificationReport:
    """Compare the iterated walk maximizers of the one-deficient family
    against the fixed-core family, as canonical-form sets."""
    spec = FamilySpec(G_KIND, delta, n)
    spec.validate()
    params = {"delta": delta, "n": n}
    try:
        family = enumerate_family(spec, budget)
        target = enumerate_family(FamilySpec(V_KIND, delta + 1, n), budget)
    except BudgetExceededError as exc:
        return VerificationReport("lemma-3.3", params, BUDGET, {}, str(exc))
    if not family:
        return VerificationReport(
            "lemma-3.3", params, FAIL, {}, "family unexpectedly empty"
        )
    trace = ex_infinity_trace(family)
    got = {graph_code(g) for g in trace.survivors}
    want = {graph_code(g) for g in target}
    profiles = [walk_profile(g, 6).counts for g in family]
    w5 = sorted(p[4] for p in profiles)
    w6 = sorted(p[5] for p in profiles)
    evidence = {
        "family_size": len(family),
        "target_size": len(target),
        "survivors": len(trace.survivors),
        "stabilization_level": trace.stabilization_level,
        "w5_min_max": [w5[0], w5[-1]],
        "w6_min_max": [w6[0], w6[-1]],
    }
    if got == want:
        return VerificationReport("lemma-3.3", params, PASS, evidence)
    evidence["unexpected_survivors"] = [
        g for g in trace.survivors if graph_code(g) not in want
    ]
    evidence["missing_targets"] = [
        g for g in target if graph_code(g) not in got
    ]
    return VerificationReport(
        "lemma-3.3", params, FAIL, evidence, "survivor set mismatch"
    )


def verify_one_set(
    base_order: int,
    t_size: int,
    h1: Graph,
    h2: Graph,
    tol: float = 1e-10,
) -> VerificationReport:
    """Embed two graphs into the dominated independent set of a common
    host and check the walk order against the radius order."""
    if h1.order != t_size or h2.order != t_size:
        raise ValueError("embedded graphs must have exactly t_size vertices")
    if base_order <= t_size:
        raise ValueError("base_order must exceed t_size")
    params = {"base_order": base_order, "t_size": t_size, "h1": h1, "h2": h2}
    base = join([primitive("complete", base_order - t_size),
                 primitive("empty", t_size)])
    offset = base_order - t_size
    g1 = base.add_edges((u + offset, v + offset) for u, v in h1.edges())
    g2 = base.add_edges((u + offset, v + offset) for u, v in h2.edges())
    rel = walk_compare(h1, h2)
    r1 = spectral_radius(g1, tol)
    r2 = spectral_radius(g2, tol)
    gap = r1.radius - r2.radius
    resid = max(r1.residual, r2.residual)
    evidence = {
        "relation": rel.relation.value,
        "witness_level": rel.witness_level,
        "radius1": r1.radius,
        "radius2": r2.radius,
        "gap": gap,
        "max_residual": resid,
    }
    if rel.relation is Relation.SUCC:
        ok = gap > 100 * resid
        expect = "strict >"
    elif rel.relation is Relation.PREC:
        ok = -gap > 100 * resid
        expect = "strict <"
    else:
        ok = abs(gap) <= 10 * tol
        expect = "equality within 10*tol"
    evidence["expected"] = expect
    if ok:
        return VerificationReport("thm-3.1", params, PASS, evidence)
    return VerificationReport(
        "thm-3.1",
        params,
        FAIL,
        {**evidence, "h1": h1, "h2": h2},
        "radius order disagrees with walk order",
    )


def _embedding_pool(k: int, left: int, budget: int | None):
    """U-family members on `left` vertices (enumerated at desk scale)."""
    return enumerate_family(FamilySpec(U_KIND, k, left), budget)


def verify_spex_structure(
    n: int, k: int, tol: float = 1e-10, budget: int | None = None
) -> VerificationReport:
    """Sweep side sizes |L| in {n/2-1, n/2, n/2+1} (every family member,
    one R edge), require every candidate odd-wheel-free, and test whether
    the predicted family attains the maximum radius; V-embedded
    candidates must additionally tie through one equitable quotient."""
    if k < 2:
        raise ValueError("k >= 2 required")
    params = {"n": n, "k": k}
    predicted_lefts = auto_left_sizes(n, k)
    sweep = sorted({n // 2 - 1, n // 2, n - n // 2, n // 2 + 1})
    candidates: list[tuple[str, int, Graph]] = []
    try:
        if k == 2:
            for left in sweep:
                g = _k2_candidate(n, left)
                candidates.append((f"L={left} matching", left, g))
        else:
            for left in sweep:
                for idx, inner in enumerate(_embedding_pool(k, left, budget)):
                    g = bipartite_candidate(n, left, inner, True)
                    candidates.append((f"L={left} member{idx}", left, g))
    except BudgetExceededError as exc:
        return VerificationReport("spex-structure", params, BUDGET, {}, str(exc))
    if not candidates:
        return VerificationReport(
            "spex-structure", params, FAIL, {}, "no candidates constructible"
        )

    wheel_hits = []
    rows = []
    by_name = {}
    best = None
    for name, left, g in candidates:
        free = not contains_odd_wheel(g, k)
        if not free:
            wheel_hits.append(name)
        res = spectral_radius(g, tol)
        rows.append(
            {"candidate": name, "left": left, "radius": res.radius,
             "residual": res.residual, "wheel_free": free}
        )
        by_name[name] = g
        if best is None or res.radius > best[0]:
            best = (res.radius, res.residual)
    assert best is not None
    max_radius, max_resid = best
    maximizers = [
        r["candidate"]
        for r in rows
        if max_radius - r["radius"] <= 100 * max(max_resid, r["residual"])
    ]
    predicted = [
        r["candidate"] for r in rows if r["left"] in predicted_lefts
    ]
    if k >= 4 and k % 2 == 0 and n % 4 == 2:
        # the balanced nearly regular embedding is the predicted winner
        predicted = [
            r["candidate"] for r in rows if r["left"] == n // 2
        ]

    evidence: dict = {
        "candidates": rows,
        "maximizers": maximizers,
        "predicted": predicted,
        "predicted_lefts": predicted_lefts,
    }
    notes = []
    if wheel_hits:
        return VerificationReport(
            "spex-structure", params, FAIL, evidence,
            f"candidates contain the forbidden wheel: {wheel_hits}",
        )

    tie_ok = True
    if k >= 4 and k % 2 == 0 and n % 4 == 2:
        vfam = enumerate_family(FamilySpec(V_KIND, k, n // 2), budget)
        vradii = []
        qmats = set()
        for inner in vfam:
            g = spex_candidate(CandidateSpec(n, k, 0, inner, True))
            qs = quotient(g, balanced_partition(k, n))
            qmats.add(qs.matrix)
            vradii.append(spectral_radius(g, tol).radius)
            if not qs.equitable:
                tie_ok = False
        if vradii and max(vradii) - min(vradii) > 10 * tol:
            tie_ok = False
        if len(qmats) > 1:
            tie_ok = False
        evidence["v_embedded_radii"] = vradii
        evidence["v_quotients_identical"] = len(qmats) <= 1
        notes.append(core_quotient_note(k))

    predicted_wins = bool(predicted) and any(
        p in maximizers for p in predicted
    )
    if predicted_wins and tie_ok:
        return VerificationReport(
            "spex-structure", params, PASS, evidence, "; ".join(notes)
        )
    if not predicted_wins:
        notes.append(
            "measured maximizer differs from the predicted family; "
            "see claim-1-thm-1.4 report for the quotient-level analysis"
        )
        evidence["maximizer_graphs"] = [by_name[m] for m in maximizers]
    if not tie_ok:
        notes.append("V-embedded candidates failed to tie")
    return VerificationReport(
        "spex-structure", params, FAIL, evidence, "; ".join(notes)
    )


def _k2_candidate(n: int, left: int) -> Graph:
    right = n - left
    edges = [(i, j) for i in range(left) for j in range(left, n)]
    edges += [(2 * i, 2 * i + 1) for i in range(left // 2)]
    edges += [(left + 2 * i, left + 2 * i + 1) for i in range(right // 2)]
    return build_graph(n, edges)


def brute_spex(n: int, k: int, tol: float = 1e-10) -> VerificationReport:
    """Exhaustive finite-n maximizer of the radius among W_{2k+1}-free
    graphs; ground truth for the detectors and constructions, explicitly
    not a check of any asymptotic statement."""
    if n > 8:
        raise ValueError("brute_spex capped at order 8")
    params = {"n": n, "k": k}
    free = [g for g in all_graphs(n) if not contains_odd_wheel(g, k)]
    best_r = -1.0
    best_resid = 0.0
    radii = []
    for g in free:
        res = spectral_radius(g, tol)
        radii.append(res.radius)
        if res.radius > best_r:
            best_r, best_resid = res.radius, res.residual
    maximizers = [
        g
        for g, r in zip(free, radii)
        if best_r - r <= 100 * max(best_resid, tol)
    ]
    return VerificationReport(
        "brute-spex",
        params,
        PASS,
        {
            "classes": len(all_graphs(n)),
            "wheel_free": len(free),
            "max_radius": best_r,
            "maximizers": maximizers,
            "maximizer_codes": [graph_code(g).hex() for g in maximizers],
        },
        "finite-n oracle, not a theorem check",
    )


def _seeded_graph(rng: random.Random, order: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if rng.random() < p
    ]
    return build_graph(order, edges)


def verify_join_bound(
    pairs: int = 200,
    max_order: int = 30,
    seed: int = 0,
    tol: float = 1e-10,
    slack: float = 1e-9,
) -> VerificationReport:
    """Seeded random pairs (H1, H2): the chain join's radius must stay
    below the Perron root of [[d, |H2|], [|H1|, d']] plus slack."""
    rng = random.Random(seed)
    params = {"pairs": pairs, "max_order": max_order, "seed": seed}
    worst = None
    for trial in range(pairs):
        n1 = rng.randint(1, max_order)
        n2 = rng.randint(1, max_order)
        p1 = rng.choice([0.2, 0.5, 0.8])
        p2 = rng.choice([0.2, 0.5, 0.8])
        h1 = _seeded_graph(rng, n1, p1)
        h2 = _seeded_graph(rng, n2, p2)
        joined = join([h1, h2])
        lhs = spectral_radius(joined, tol).radius
        bound = matrix_radius(
            [[h1.max_degree(), n2], [n1, h2.max_degree()]], tol
        ).radius
        margin = bound - lhs
        if worst is None or margin < worst[0]:
            worst = (margin, trial, n1, n2)
        if lhs > bound + slack:
            return VerificationReport(
                "lemma-2.1",
                params,
                FAIL,
                {
                    "trial": trial,
                    "h1": h1,
                    "h2": h2,
                    "join_radius": lhs,
                    "bound": bound,
                },
                "join bound violated",
            )
    assert worst is not None
    return VerificationReport(
        "lemma-2.1",
        params,
        PASS,
        {"min_margin": worst[0], "tightest_trial": worst[1:]},
    )


def fact1_bound(k: int, n: int) -> float:
    return (k - 1 + ((k - 1) ** 2 + n * n - 1) ** 0.5) / 2 + 1 / (2 * n)


def verify_fact1(k: int, n: int, tol: float = 1e-10) -> VerificationReport:
    """Finite-n observation: the constructed candidate's radius exceeds
    the lower bound the asymptotic argument relies on."""
    params = {"k": k, "n": n}
    if k % 2 == 0 and n % 4 == 2:
        inner = standard_member(V_KIND, k, n // 2)
        g = spex_candidate(CandidateSpec(n, k, 0, inner, True))
    else:
        left = auto_left_sizes(n, k)[0]
        g = bipartite_candidate(n, left, standard_member(U_KIND, k, left), True)
    res = spectral_radius(g, tol)
    bound = fact1_bound(k, n)
    evidence = {
        "radius": res.radius,
        "bound": bound,
        "margin": res.radius - bound,
        "candidate_order": g.order,
    }
    outcome = PASS if res.radius > bound else FAIL
    return VerificationReport(
        "fact-1", params, outcome, evidence,
        "finite-n observation of an asymptotic inequality",
    )


def verify_claim1(k: int, n_values: list[int]) -> VerificationReport:
    """Exact-rational comparison of the two quotient matrices at every n:
    requires radius1 > radius2 and a negative sign at the bracketed root."""
    params = {"k": k, "n_values": list(n_values)}
    rows = []
    ok = True
    first_violation = None
    for n in n_values:
        res = claim1_comparison(k, n)
        rows.append(
            {
                "n": n,
                "radius1": res.radius1,
                "radius2": res.radius2,
                "sign_at_root": res.sign_at_root,
                "gap": res.radius1 - res.radius2,
            }
        )
        if not (res.radius1 > res.radius2 and res.sign_at_root < 0):
            ok = False
            if first_violation is None:
                first_violation = {
                    "n": n,
                    "matrix1": [[str(x) for x in row] for row in res.matrix1],
                    "matrix2": [[str(x) for x in row] for row in res.matrix2],
                }
    notes = core_quotient_note(k)
    if not ok:
        notes += (
            "; measured order is radius1 < radius2 at every checked n: the "
            "claimed inequality holds only for the matrix variant with the "
            "k-3 diagonal entry, which the degree row sums rule out"
        )
    evidence: dict = {"comparisons": rows}
    if first_violation is not None:
        evidence["first_violation"] = first_violation
    return VerificationReport(
        "claim-1-thm-1.4", params, PASS if ok else FAIL, evidence, notes,
    )


def run_claim(claim_id: str, **kwargs) -> VerificationReport:
    """CLI dispatcher; unknown ids raise KeyError with the known list."""
    if claim_id == "lemma-3.2":
        return verify_bounded_order(
            kwargs["delta"], kwargs["order_cap"], kwargs.get("budget")
        )
    if claim_id == "lemma-3.3":
        return verify_walk_lemma(
            kwargs["delta"], kwargs["n"], kwargs.get("budget")
        )
    if claim_id == "thm-3.1":
        return verify_one_set(
            kwargs["base_order"], kwargs["t_size"], kwargs["h1"], kwargs["h2"],
            kwargs.get("tol", 1e-10),
        )
    if claim_id == "spex-structure":
        return verify_spex_structure(
            kwargs["n"], kwargs["k"], kwargs.get("tol", 1e-10),
            kwargs.get("budget"),
        )
    if claim_id == "claim-1-thm-1.4":
        return verify_claim1(kwargs["k"], kwargs["n_values"])
    if claim_id == "fact-1":
        return verify_fact1(kwargs["k"], kwargs["n"], kwargs.get("tol", 1e-10))
    if claim_id == "lemma-2.1":
        return verify_join_bound(
            kwargs.get("pairs", 200),
            kwargs.get("max_order", 30),
            kwargs.get("seed", 0),
            kwargs.get("tol", 1e-10),
            kwargs.get("slack", 1e-9),
        )
    if claim_id == "brute-spex":
        return brute_spex(kwargs["n"], kwargs["k"], kwargs.get("tol", 1e-10))
    raise KeyError(
        f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}"
    )
