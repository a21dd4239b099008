"""Benchmark the compiled counting kernel against the pure Python fallback.

Runs the finite-field complement count on a few arrangements with both
backends and prints wall times plus the speedup.  The full point walk is
p^(n+1) evaluations, so the pure backend is compared at modest primes and
the compiled kernel is additionally timed at a larger prime on its own.
Counts from the two backends are compared to make sure the numbers agree.

Usage: python benchmarks/bench_ffcount.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from arrinv.arrangement import parse_arrangement
from arrinv.ffcount import count_complement_points, kernel_available
from arrinv.fixtures import fixture


def timed(fn, repeat):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def compare_backends(a, primes, repeat):
    for p in primes:
        pure, t_pure = timed(
            lambda: count_complement_points(a, p, backend="pure"), repeat)
        if not kernel_available():
            print(f"  p={p:>4}: pure {t_pure * 1e3:8.2f} ms   "
                  f"compiled unavailable   count {pure}")
            continue
        comp, t_comp = timed(
            lambda: count_complement_points(a, p, backend="compiled"), repeat)
        assert comp == pure, f"backend mismatch at p={p}"
        speedup = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"  p={p:>4}: pure {t_pure * 1e3:8.2f} ms   "
              f"compiled {t_comp * 1e3:8.2f} ms   speedup {speedup:6.1f}x   "
              f"count {pure}")


def compiled_only(a, p, repeat):
    if not kernel_available():
        print(f"  p={p:>4}: compiled unavailable, skipped")
        return
    count, t = timed(
        lambda: count_complement_points(a, p, backend="compiled"), repeat)
    print(f"  p={p:>4}: compiled {t * 1e3:8.2f} ms   count {count}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions, best of N (default 3)")
    args = ap.parse_args()

    print(f"compiled kernel available: {kernel_available()}")

    for name in ("a3_braid", "generic6_off_conic", "m6_three_triples"):
        a = fixture(name)
        print(f"{name} (n={a.n}, m={a.m}), both backends")
        compare_backends(a, (31, 101), args.repeat)
        print(f"{name} (n={a.n}, m={a.m}), compiled at a larger prime")
        compiled_only(a, 499, args.repeat)

    cubic = parse_arrangement(3, [[1, t, t * t, t ** 3] for t in range(7)])
    print("twisted cubic planes (n=3, m=7), both backends")
    compare_backends(cubic, (11, 31), args.repeat)
    print("twisted cubic planes (n=3, m=7), compiled at a larger prime")
    compiled_only(cubic, 101, args.repeat)


if __name__ == "__main__":
    main()
