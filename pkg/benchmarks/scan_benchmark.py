#!/usr/bin/env python3
"""Benchmark the lattice-scan backends (numba / numpy / python) on the
counting workloads that dominate the package's runtime.

Usage: python benchmarks/scan_benchmark.py [--repeats N] [--skip-python]

The python backend is exact big-integer arithmetic and is only competitive
on tiny boxes; skip it for the large workloads if you are in a hurry.
"""

import argparse
import time
from fractions import Fraction

from reflexpoly import _scan
from reflexpoly.polytope import from_hrep, dilate, integer_bounding_box


def workloads():
    tri = from_hrep([((-1, 0), 1), ((0, -1), 1), ((2, 3), 1)], 2)
    simplex3 = from_hrep(
        [((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0), ((1, 1, 1), 1)], 3
    )
    rational = from_hrep([((-1, 0), 0), ((0, -1), 0), ((2, 3), 5)], 2)
    return [
        ("triangle x200 (2d)", dilate(tri, 200)),
        ("triangle x800 (2d)", dilate(tri, 800)),
        ("simplex x120 (3d)", dilate(simplex3, 120)),
        ("rational x300 (2d)", dilate(rational, 300)),
    ]


def time_backend(name, poly, repeats):
    lo, hi = integer_bounding_box(poly)
    normals = tuple(h.normal for h in poly.hrep)
    offsets = tuple(h.offset for h in poly.hrep)
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = _scan.backend_count(name, lo, hi, normals, offsets, False)
        best = min(best, time.perf_counter() - t0)
    vol = 1
    for a, b in zip(lo, hi):
        vol *= b - a + 1
    return value, best, vol


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--skip-python", action="store_true")
    args = ap.parse_args()

    backends = ["numpy", "python"] if not args.skip_python else ["numpy"]
    if _scan.HAVE_NUMBA:
        # warm the jit once so compile time is not billed to the benchmark
        _scan.backend_count("numba", (0, 0), (3, 3), ((1, 1),), (Fraction(3),), False)
        backends.insert(0, "numba")

    print(f"{'workload':<22} {'box pts':>10} " + "".join(f"{b:>12}" for b in backends))
    for label, poly in workloads():
        row = f"{label:<22} "
        counts = set()
        vol = None
        times = {}
        for b in backends:
            if b == "python" and not args.skip_python:
                lo, hi = integer_bounding_box(poly)
                boxvol = 1
                for a, c in zip(lo, hi):
                    boxvol *= c - a + 1
                if boxvol > 3_000_000:
                    times[b] = None
                    continue
            value, best, vol = time_backend(b, poly, args.repeats)
            counts.add(value)
            times[b] = best
        assert len(counts) == 1, f"backends disagree on {label}: {counts}"
        row += f"{vol:>10} "
        for b in backends:
            row += f"{times[b] * 1000:>10.2f}ms" if times[b] is not None else f"{'skipped':>12}"
        print(row + f"   count={counts.pop()}")


if __name__ == "__main__":
    main()
