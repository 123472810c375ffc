#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Micro benchmarks call both implementations directly on identical seeded
workloads; the end-to-end benchmark reruns a degree-constrained
enumeration in a subprocess with ODDWHEEL_PURE=1 so the import-time
dispatcher picks the fallback.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import pathlib
import random
import subprocess
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from oddwheel import _kernels_py  # noqa: E402

try:
    from oddwheel import _kernels  # noqa: E402
except ImportError:
    _kernels = None


def random_rows(rng, n, p):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def timeit(fn, reps=3):
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_canon(impl, graphs):
    def run():
        for n, rows in graphs:
            impl.canon_code(n, rows)

    return timeit(run)


def bench_cycle(impl, graphs, length):
    def run():
        for n, rows in graphs:
            impl.has_cycle_of_length(n, rows, length, -1)

    return timeit(run)


def bench_path(impl, graphs):
    def run():
        for n, rows in graphs:
            impl.longest_path_order(n, rows, -1)

    return timeit(run)


def enumeration_subprocess(pure: bool) -> float:
    env = dict(os.environ)
    env["ODDWHEEL_PURE"] = "1" if pure else "0"
    env["PYTHONPATH"] = str(
        pathlib.Path(__file__).resolve().parent.parent / "src"
    )
    script = (
        "import time; t0 = time.perf_counter();"
        "from oddwheel.enumerate import connected_with_degrees;"
        "connected_with_degrees(10, 4, False);"
        "print(time.perf_counter() - t0)"
    )
    out = subprocess.run(
        [sys.executable, "-c", script],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    count = 60 if args.quick else 300
    canon_graphs = [
        (n, random_rows(rng, n, rng.choice([0.3, 0.5, 0.8])))
        for n in (8, 9, 10)
        for _ in range(count // 3)
    ]
    cycle_graphs = [
        (16, random_rows(rng, 16, 0.25)) for _ in range(count)
    ]
    path_graphs = [
        (12, random_rows(rng, 12, 0.35)) for _ in range(count // 2)
    ]

    rows = []
    for name, fn in [
        ("canon_code (n=8..10)", lambda impl: bench_canon(impl, canon_graphs)),
        ("has_cycle len=8 (n=16)", lambda impl: bench_cycle(impl, cycle_graphs, 8)),
        ("longest_path (n=12)", lambda impl: bench_path(impl, path_graphs)),
    ]:
        pure_t = fn(_kernels_py)
        if _kernels is not None:
            comp_t = fn(_kernels)
            rows.append((name, pure_t, comp_t, pure_t / comp_t))
        else:
            rows.append((name, pure_t, None, None))

    print(f"{'workload':28} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, pure_t, comp_t, speedup in rows:
        if comp_t is None:
            print(f"{name:28} {pure_t:10.4f} {'n/a':>13} {'n/a':>8}")
        else:
            print(f"{name:28} {pure_t:10.4f} {comp_t:13.4f} {speedup:7.1f}x")

    if not args.quick:
        pure_e = enumeration_subprocess(pure=True)
        comp_e = enumeration_subprocess(pure=False)
        print(
            f"{'enumerate 4-regular n=10':28} {pure_e:10.4f} "
            f"{comp_e:13.4f} {pure_e / comp_e:7.1f}x"
        )
    if _kernels is None:
        print("compiled kernels unavailable; fallback timings only")


if __name__ == "__main__":
    main()
