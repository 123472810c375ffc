"""Command-line surface.

Exit status: 0 success/PASS, 1 FAIL, 2 usage error, 3 budget exhausted.
Graph inputs are files in graph6 or edge-list form (sniffed); outputs
honor --format.  All numeric output is full precision, locale-free.
"""

from __future__ import annotations

import argparse
import json
import sys

from oddwheel.detect import (
    contains_cycle_of_length,
    contains_odd_wheel,
    is_star_free,
    longest_path_order,
)
from oddwheel.enumerate import BudgetExceededError
from oddwheel.families import (
    CandidateSpec,
    FamilySpec,
    auto_left_sizes,
    bipartite_candidate,
    core_component,
    enumerate_family,
    matching_embedded_candidate,
    odd_wheel,
    primitive,
    spex_candidate,
)
from oddwheel.formats import (
    FormatError,
    encode_edge_list,
    encode_graph6,
    read_graph_text,
)
from oddwheel.graphs import Graph, GraphError
from oddwheel.spectral import spectral_radius
from oddwheel.verify import CLAIMS, run_claim
from oddwheel.walks import walk_compare, walk_profile

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return read_graph_text(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_text(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return encode_edge_list(g)
    if fmt == "json":
        return json.dumps(
            {"order": g.order, "edges": [list(e) for e in g.edges()]},
            indent=2,
        ) + "\n"
    return encode_graph6(g) + "\n"


def _common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=1e-10)
    sub.add_argument("--max-walk", type=int, default=None)
    sub.add_argument("--budget", type=int, default=None)
    sub.add_argument(
        "--format", choices=["graph6", "edgelist", "json"], default="graph6"
    )
    sub.add_argument("--out", default=None)
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddwheel",
        description="spectral extremal laboratory for odd-wheel-free graphs",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("construct", help="emit a named graph or candidate")
    p.add_argument(
        "what",
        choices=[
            "odd-wheel", "core", "complete", "cycle", "matching", "empty",
            "candidate", "matching-candidate",
        ],
    )
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--s", type=int, default=None,
                   help="side imbalance; omitted = residue-appropriate size")
    p.add_argument("--family", choices=["U", "V"], default=None)
    p.add_argument("--member", type=int, default=0,
                   help="index into the family enumeration for the embedding")
    p.add_argument("--no-r-edge", action="store_true")
    _common(p)

    p = subs.add_parser("check", help="odd-wheel / cycle / path / star queries")
    p.add_argument("kind", choices=["odd-wheel", "cycle", "path", "star"])
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--len", type=int, default=None, dest="length")
    _common(p)

    p = subs.add_parser("spectral", help="radius and Perron vector, JSON")
    p.add_argument("graph")
    _common(p)

    p = subs.add_parser("walks", help="walk profile to level L")
    p.add_argument("graph")
    _common(p)

    p = subs.add_parser("compare", help="walk-count order of two graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    _common(p)

    p = subs.add_parser("enumerate", help="family members as a graph6 stream")
    p.add_argument("--kind", choices=["U", "V", "GFAM"], required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    _common(p)

    p = subs.add_parser("verify", help="run a verification job")
    p.add_argument("claim", choices=sorted(CLAIMS))
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--base-order", type=int, default=40)
    p.add_argument("--t-size", type=int, default=6)
    p.add_argument("--h1", default=None, help="graph file for thm-3.1")
    p.add_argument("--h2", default=None, help="graph file for thm-3.1")
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--max-order", type=int, default=30)
    p.add_argument("--n-values", default=None,
                   help="comma-separated n list for claim-1-thm-1.4")
    _common(p)

    p = subs.add_parser("brute-spex", help="exhaustive small-n maximizers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _common(p)

    return parser


def _cmd_construct(args) -> int:
    what = args.what
    if what == "odd-wheel":
        if args.k is None:
            raise SystemExit2("--k required for odd-wheel")
        g = odd_wheel(args.k)
    elif what == "core":
        if args.k is None:
            raise SystemExit2("--k required for core")
        g = core_component(args.k)
    elif what in ("complete", "cycle", "matching", "empty"):
        if args.m is None:
            raise SystemExit2("--m required for primitives")
        g = primitive(what, args.m)
    elif what == "matching-candidate":
        if args.n is None:
            raise SystemExit2("--n required")
        g = matching_embedded_candidate(args.n)
    else:  # candidate
        if args.n is None or args.k is None:
            raise SystemExit2("--n and --k required for candidate")
        n, k = args.n, args.k
        family = args.family or ("V" if k % 2 == 0 and n % 4 == 2 else "U")
        if args.s is not None:
            left = n // 2 + args.s
        else:
            left = n // 2 if family == "V" else auto_left_sizes(n, k)[-1]
        pool = enumerate_family(
            FamilySpec(family, k, left), budget=args.budget
        )
        if not pool:
            raise SystemExit2(f"family {family}_{{{k},{left}}} is empty")
        if not 0 <= args.member < len(pool):
            raise SystemExit2(
                f"--member out of range (family has {len(pool)} members)"
            )
        inner = pool[args.member]
        r_edge = not args.no_r_edge
        if args.s is not None and args.n % 2 == 0:
            g = spex_candidate(CandidateSpec(n, k, args.s, inner, r_edge))
        else:
            g = bipartite_candidate(n, left, inner, r_edge)
    _emit(_graph_text(g, args.format), args.out)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _read_graph(args.graph)
    budget = args.budget if args.budget is not None else 10_000_000
    if args.kind == "odd-wheel":
        if args.k is None:
            raise SystemExit2("--k required")
        found = contains_odd_wheel(g, args.k, budget)
        _emit(f"odd-wheel k={args.k}: {'present' if found else 'absent'}\n",
              args.out)
    elif args.kind == "cycle":
        if args.length is None:
            raise SystemExit2("--len required")
        found = contains_cycle_of_length(g, args.length, budget)
        _emit(f"cycle len={args.length}: "
              f"{'present' if found else 'absent'}\n", args.out)
    elif args.kind == "path":
        order = longest_path_order(g, budget)
        _emit(f"longest path order: {order}\n", args.out)
    else:
        if args.k is None:
            raise SystemExit2("--k required")
        _emit(f"star-free k={args.k}: {is_star_free(g, args.k)}\n", args.out)
    return EXIT_OK


def _cmd_spectral(args) -> int:
    g = _read_graph(args.graph)
    res = spectral_radius(g, args.tol)
    payload = {
        "radius": res.radius,
        "perron": list(res.perron),
        "residual": res.residual,
        "iterations": res.iterations,
        "note": res.note,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_walks(args) -> int:
    g = _read_graph(args.graph)
    levels = args.max_walk or 2 * max(g.order, 1)
    profile = walk_profile(g, levels)
    if args.format == "json":
        text = json.dumps(
            {"levels": levels, "counts": [str(c) for c in profile.counts]},
            indent=2,
        ) + "\n"
    else:
        lines = ["level,count"]
        lines += [f"{i},{c}" for i, c in enumerate(profile.counts, start=1)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    g1 = _read_graph(args.graph1)
    g2 = _read_graph(args.graph2)
    res = walk_compare(g1, g2, args.max_walk)
    if res.witness_level is None:
        _emit(f"{res.relation.value}\n", args.out)
    else:
        _emit(f"{res.relation.value} at level {res.witness_level}\n", args.out)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    members = enumerate_family(
        FamilySpec(args.kind, args.degree, args.order), budget=args.budget
    )
    text = "".join(_graph_text(g, args.format) for g in members)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    kwargs: dict = {"tol": args.tol, "budget": args.budget}
    claim = args.claim
    if claim == "lemma-3.2":
        kwargs.update(delta=args.delta or 3, order_cap=args.cap or 10)
    elif claim == "lemma-3.3":
        kwargs.update(delta=args.delta or 3, n=args.n or 13)
    elif claim == "thm-3.1":
        if not (args.h1 and args.h2):
            raise SystemExit2("thm-3.1 needs --h1 and --h2 graph files")
        kwargs.update(
            base_order=args.base_order,
            t_size=args.t_size,
            h1=_read_graph(args.h1),
            h2=_read_graph(args.h2),
        )
    elif claim == "spex-structure":
        if args.n is None or args.k is None:
            raise SystemExit2("spex-structure needs --n and --k")
        kwargs.update(n=args.n, k=args.k)
    elif claim == "claim-1-thm-1.4":
        k = args.k or 4
        if args.n_values:
            n_values = [int(x) for x in args.n_values.split(",")]
        elif args.n:
            n_values = [args.n]
        else:
            n_values = [22, 102]
        kwargs = {"k": k, "n_values": n_values}
    elif claim == "fact-1":
        kwargs.update(k=args.k or 3, n=args.n or 100)
        kwargs.pop("budget", None)
    elif claim == "lemma-2.1":
        kwargs.update(pairs=args.pairs, max_order=args.max_order,
                      seed=args.seed)
        kwargs.pop("budget", None)
    elif claim == "brute-spex":
        if args.n is None or args.k is None:
            raise SystemExit2("brute-spex needs --n and --k")
        kwargs.update(n=args.n, k=args.k)
        kwargs.pop("budget", None)
    report = run_claim(claim, **kwargs)
    _emit(report.to_json() + "\n", args.out)
    if report.outcome == "PASS":
        return EXIT_OK
    if report.outcome == "BUDGET":
        return EXIT_BUDGET
    return EXIT_FAIL


def _cmd_brute_spex(args) -> int:
    report = run_claim("brute-spex", n=args.n, k=args.k, tol=args.tol)
    _emit(report.to_json() + "\n", args.out)
    return EXIT_OK if report.outcome == "PASS" else EXIT_FAIL


class SystemExit2(Exception):
    """Usage error carrying the message for exit status 2."""


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "check": _cmd_check,
        "spectral": _cmd_spectral,
        "walks": _cmd_walks,
        "compare": _cmd_compare,
        "enumerate": _cmd_enumerate,
        "verify": _cmd_verify,
        "brute-spex": _cmd_brute_spex,
    }
    try:
        return handlers[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, FormatError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
