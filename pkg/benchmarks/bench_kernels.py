"""Compare the compiled and pure-Python summation kernels.

    python benchmarks/bench_kernels.py [--terms N] [--digits D] [--repeat R]
"""

from __future__ import annotations

import argparse
import sys
import timeit

from madhava import _pykernels as py
from madhava import kernels

CASES = [("leibniz", py.LEIBNIZ), ("eq40", py.EQ40), ("sqrt12", py.SQRT12)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=200_000)
    ap.add_argument("--digits", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.ckernels is None:
        print("compiled kernels unavailable; only the Python backend can be timed", file=sys.stderr)
    unit = 4 * 10 ** args.digits
    print(f"{'series':<10}{'terms':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, kind in CASES:
        terms = min(args.terms, 2000) if kind == py.SQRT12 else args.terms
        backends = {"python": py}
        if kernels.ckernels is not None:
            backends["cython"] = kernels.ckernels
        times, results = {}, {}
        for label, mod in backends.items():
            times[label] = min(timeit.repeat(lambda: mod.block_sum(kind, 1, terms + 1, unit),
                                             number=1, repeat=args.repeat))
            results[label] = mod.block_sum(kind, 1, terms + 1, unit)
        if len(set(results.values())) != 1:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        c = times.get("cython")
        speed = f"{times['python'] / c:.2f}x" if c else "-"
        c_text = f"{c:.4f}" if c else "-"
        print(f"{name:<10}{terms:>10}{times['python']:>12.4f}{c_text:>12}{speed:>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
