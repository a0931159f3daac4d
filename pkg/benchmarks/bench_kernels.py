#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Workloads mirror the hot paths of the censuses: raw composition
throughput, full-group breadth-first closure, involution filtering, and
the excess scan over a whole group's longest class elements.

Run: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from coxlen import _kernels_py as PURE
from coxlen import coxgen
from coxlen.excess import generators

try:
    from coxlen import _kernels_cy as COMPILED
except ImportError:
    COMPILED = None


def timeit(fn, *args, repeat=1):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def bench_compose(impl, elements, pairs):
    def run():
        compose = impl.compose
        for i, j in pairs:
            compose(elements[i], elements[j])

    return timeit(run)[0]


def bench_closure(impl, gens, limit):
    return timeit(impl.closure, gens, limit)


def bench_involutions(impl, group):
    return timeit(impl.involution_filter, group)


def bench_excess_scan(impl, group, gens, invs, inv_lengths):
    # the real census workload: the longest elements of every class
    assigned = set()
    longest = []
    for x in group:
        if x in assigned:
            continue
        orbit = impl.conjugacy_orbit(x, gens, 10**7)
        assigned.update(orbit)
        lengths = [impl.sign_count(y) for y in orbit]
        top = max(lengths)
        longest.extend((y, top) for y in orbit if impl.sign_count(y) == top)

    def run():
        for y, top in longest:
            impl.reversing_excess(y, impl.inverse(y), invs, inv_lengths, None, top)

    return timeit(run)[0], len(longest)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="use F4 instead of E6")
    args = ap.parse_args()

    impls = [PURE] + ([COMPILED] if COMPILED else [])
    if COMPILED is None:
        print("note: compiled extension not built; showing pure numbers only")
        print("      build it with: python setup.py build_ext --inplace")

    name = "F4" if args.quick else "E6"
    table = coxgen.build_root_table(coxgen.preset_matrix(name))
    gens = list(table.gen_tables)
    limit = 10**7

    print(f"\nreference group: {name} ({table.num_positive} positive roots)")
    baseline = {}
    rows = []
    for impl in impls:
        group = impl.closure(gens, limit)
        rng = random.Random(0)
        pairs = [(rng.randrange(len(group)), rng.randrange(len(group))) for _ in range(200_000)]
        t_compose = bench_compose(impl, group, pairs)
        t_closure, _ = bench_closure(impl, gens, limit)
        t_inv, invs = bench_involutions(impl, group)
        inv_lengths = [impl.sign_count(x) for x in invs]
        t_excess, n_longest = bench_excess_scan(impl, group, gens, invs, inv_lengths)
        rows.append((impl.BACKEND, t_compose, t_closure, t_inv, t_excess))
        baseline.setdefault("compose", t_compose)
        baseline.setdefault("closure", t_closure)
        baseline.setdefault("involutions", t_inv)
        baseline.setdefault("excess", t_excess)

    window_gens = [g.to_codes() for g in generators("B", 5)]
    print(f"group order {len(impls[0].closure(gens, limit))}, "
          f"involutions {len(invs)}, longest-class elements {n_longest}")
    print(f"extra closure workload: B5 windows ({len(window_gens[0])} letters)")
    for impl in impls:
        t_b5, grp = bench_closure(impl, window_gens, limit)
        rows_b5 = t_b5
        print(f"  {impl.BACKEND:12s} closure(B5) {t_b5 * 1000:9.1f} ms "
              f"({len(grp)} elements)")

    header = f"{'backend':12s} {'compose 200k':>14s} {'closure':>12s} {'involutions':>12s} {'excess scan':>12s}"
    print("\n" + header)
    for backend, t_compose, t_closure, t_inv, t_excess in rows:
        print(
            f"{backend:12s} {t_compose * 1000:12.1f} ms {t_closure * 1000:10.1f} ms "
            f"{t_inv * 1000:10.1f} ms {t_excess * 1000:10.1f} ms"
        )
    if len(rows) == 2:
        print(f"\n{'speedup':12s}", end="")
        for k in range(1, 5):
            print(f" {rows[0][k] / rows[1][k]:13.1f}x", end="")
        print()


if __name__ == "__main__":
    main()
