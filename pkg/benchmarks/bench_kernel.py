#!/usr/bin/env python3
"""Benchmark the pure and compiled multiplication kernels on real workloads.

Each scenario is run with every available backend; caches that would let one
backend coast on another's work are cleared between runs.  Results are exact
either way -- the benchmark only measures time.

Run from the repository root:

    python3 benchmarks/bench_kernel.py
    python3 benchmarks/bench_kernel.py --repeat 5
"""

from __future__ import annotations

import argparse
import random
import time

from schubres import kernel
from schubres.bundles import sym_power, sym_ustar, ustar
from schubres.chow import GrassContext
from schubres.identities import IdentityCase, bracket_sum
from schubres.limits import DegenerationSpec, decompose_degeneration
from schubres.symfunc import GeneratorSpec, GradedPoly


def _clear_caches() -> None:
    sym_ustar.cache_clear()


def scenario_random_products() -> None:
    rng = random.Random(42)
    spec = GeneratorSpec(("a", "b", "c"), (1, 2, 3), 18)
    polys = []
    for _ in range(12):
        terms = {}
        for _ in range(40):
            expo = (rng.randint(0, 6), rng.randint(0, 4), rng.randint(0, 3))
            if expo[0] + 2 * expo[1] + 3 * expo[2] <= 18:
                terms[expo] = rng.randint(-99, 99)
        polys.append(GradedPoly(spec, terms))
    for p in polys:
        for q in polys:
            _ = p * q


def scenario_sym_powers() -> None:
    ctx = GrassContext(2, 7)
    _ = sym_power(ustar(ctx), 4)


def scenario_quintic_table() -> None:
    ctx = GrassContext(1, 4)
    for pieces in (((1, 4), (1, 1)), ((1, 3), (2, 1)), ((2, 2), (1, 1))):
        _ = decompose_degeneration(DegenerationSpec(ctx, pieces))


def scenario_quartic_case() -> None:
    ctx = GrassContext(2, 7)
    _ = decompose_degeneration(DegenerationSpec(ctx, ((1, 2), (2, 1))))


def scenario_identity_grid() -> None:
    ctx = GrassContext(2, 5)
    for k in range(1, 4):
        for l in range(1, 5 - k):
            _ = bracket_sum(IdentityCase(ctx, k, l))


SCENARIOS = (
    ("random 3-generator products", scenario_random_products),
    ("Sym^4 of U* on G(2, 7)", scenario_sym_powers),
    ("quintic degeneration cases", scenario_quintic_table),
    ("quartic degeneration case", scenario_quartic_case),
    ("identity grid on G(2, 5)", scenario_identity_grid),
)


def time_scenario(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        _clear_caches()
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per scenario, best time wins (default 3)")
    args = parser.parse_args()

    names = kernel.available_backends()
    print(f"backends: {', '.join(names)} (repeat={args.repeat}, best-of)")
    header = f"{'scenario':<32}" + "".join(f"{name:>12}" for name in names)
    if len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    original = kernel.backend_name()
    try:
        for label, fn in SCENARIOS:
            times = {}
            for name in names:
                kernel.set_backend(name)
                times[name] = time_scenario(fn, args.repeat)
            row = f"{label:<32}" + "".join(f"{times[name]:>11.4f}s" for name in names)
            if "python" in times and "cython" in times and times["cython"] > 0:
                row += f"{times['python'] / times['cython']:>9.2f}x"
            print(row)
    finally:
        kernel.set_backend(original)
        _clear_caches()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
