"""Benchmark the pure-Python Garside kernel against the compiled one.

Times left_normal_form and crossing_counts over identical random word
batches and prints per-call timings with the speedup factor.  Results are
cross-checked for agreement while timing, so a lane that drifts out of
sync fails loudly rather than reporting a meaningless number.

Usage:
    python3 benchmarks/bench_kernels.py [--strands N] [--lengths L1,L2,...]
                                        [--count K] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from chromabraid import _garside_py

try:
    from chromabraid import _garside_cy
except ImportError:
    _garside_cy = None


def make_words(strands: int, length: int, count: int, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    alphabet = [k for s in (1, -1) for k in range(s, s * strands, s)]
    return [
        tuple(rng.choice(alphabet) for _ in range(length)) for _ in range(count)
    ]


def time_lane(module, func_name: str, strands: int, words) -> tuple[float, list]:
    func = getattr(module, func_name)
    results = []
    start = time.perf_counter()
    for letters in words:
        results.append(func(strands, letters))
    elapsed = time.perf_counter() - start
    return elapsed / len(words), results


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--strands", type=int, default=8)
    parser.add_argument("--lengths", default="50,200,800",
                        help="comma-separated word lengths")
    parser.add_argument("--count", type=int, default=200,
                        help="words per batch")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    lengths = [int(tok) for tok in args.lengths.split(",")]

    if _garside_cy is None:
        print("compiled kernel not built; timing the pure lane only",
              file=sys.stderr)

    header = f"{'function':<18} {'length':>7} {'pure us':>12} {'compiled us':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for func_name in ("left_normal_form", "crossing_counts"):
        for length in lengths:
            words = make_words(args.strands, length, args.count, args.seed)
            pure_us, pure_res = time_lane(_garside_py, func_name, args.strands, words)
            if _garside_cy is None:
                print(f"{func_name:<18} {length:>7} {pure_us * 1e6:>12.1f} "
                      f"{'-':>12} {'-':>8}")
                continue
            cy_us, cy_res = time_lane(_garside_cy, func_name, args.strands, words)
            if pure_res != cy_res:
                print(f"LANE MISMATCH in {func_name} at length {length}",
                      file=sys.stderr)
                return 1
            print(f"{func_name:<18} {length:>7} {pure_us * 1e6:>12.1f} "
                  f"{cy_us * 1e6:>12.1f} {pure_us / cy_us:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
