"""Integer box scans: the hot loop behind every lattice-point count.

A scan enumerates the integer points of a box [lo, hi] and keeps those
satisfying q_i * <x, u_i> <= p_i (strictly, when requested) for every facet
(u_i, p_i/q_i).  Everything is integer arithmetic, so the accelerated paths
are exact as long as they cannot overflow int64; a conservative bound check
routes anything risky to the big-integer Python path.

Backends:
  * "numba"  - @njit kernels (default when numba imports),
  * "numpy"  - chunked vectorized fallback,
  * "python" - pure-Python big ints, always exact.

Select explicitly with the env flag REFLEX_SCAN=numba|numpy|python.  Points
are always produced in lexicographic order, identically on every backend.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from typing import Sequence

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


_INT64_LIMIT = 2**62
_CHUNK = 1 << 17


def _split_offsets(offsets: Sequence[Fraction]) -> tuple[list[int], list[int]]:
    nums, dens = [], []
    for b in offsets:
        b = Fraction(b)
        nums.append(b.numerator)
        dens.append(b.denominator)
    return nums, dens


def _box_volume(lo: Sequence[int], hi: Sequence[int]) -> int:
    vol = 1
    for a, b in zip(lo, hi):
        if b < a:
            return 0
        vol *= b - a + 1
    return vol


def _int64_safe(lo, hi, normals, nums, dens) -> bool:
    if _box_volume(lo, hi) >= _INT64_LIMIT:
        return False
    for row, p, q in zip(normals, nums, dens):
        bound = q * sum(abs(c) * max(abs(a), abs(b)) for c, a, b in zip(row, lo, hi))
        if bound >= _INT64_LIMIT or abs(p) >= _INT64_LIMIT:
            return False
    return True


def resolve_backend(lo, hi, normals, nums, dens) -> str:
    """Pick the backend for this scan, honoring REFLEX_SCAN and exactness."""
    choice = os.environ.get("REFLEX_SCAN", "").strip().lower()
    if choice not in ("", "auto", "numba", "numpy", "python"):
        raise ValueError(f"REFLEX_SCAN must be numba|numpy|python, got {choice!r}")
    if choice == "python":
        return "python"
    if not _int64_safe(lo, hi, normals, nums, dens):
        return "python"
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        return "numba" if HAVE_NUMBA else "numpy"
    return "numba" if HAVE_NUMBA else "numpy"


def default_backend_name() -> str:
    choice = os.environ.get("REFLEX_SCAN", "").strip().lower() or "auto"
    if choice == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    return choice


# -- numba kernels -----------------------------------------------------------


@njit(cache=True)
def _count_njit(lo, wid, normals, pnum, qden, strict):  # pragma: no cover - jitted
    d = lo.shape[0]
    m = normals.shape[0]
    total = np.int64(1)
    for j in range(d):
        total *= wid[j]
    count = 0
    x = np.empty(d, np.int64)
    for lin in range(total):
        t = lin
        for j in range(d - 1, -1, -1):
            x[j] = lo[j] + t % wid[j]
            t //= wid[j]
        ok = True
        for i in range(m):
            s = np.int64(0)
            for j in range(d):
                s += normals[i, j] * x[j]
            s *= qden[i]
            if strict:
                if s >= pnum[i]:
                    ok = False
                    break
            else:
                if s > pnum[i]:
                    ok = False
                    break
        if ok:
            count += 1
    return count


@njit(cache=True)
def _fill_njit(lo, wid, normals, pnum, qden, strict, out):  # pragma: no cover
    d = lo.shape[0]
    m = normals.shape[0]
    total = np.int64(1)
    for j in range(d):
        total *= wid[j]
    k = 0
    x = np.empty(d, np.int64)
    for lin in range(total):
        t = lin
        for j in range(d - 1, -1, -1):
            x[j] = lo[j] + t % wid[j]
            t //= wid[j]
        ok = True
        for i in range(m):
            s = np.int64(0)
            for j in range(d):
                s += normals[i, j] * x[j]
            s *= qden[i]
            if strict:
                if s >= pnum[i]:
                    ok = False
                    break
            else:
                if s > pnum[i]:
                    ok = False
                    break
        if ok:
            for j in range(d):
                out[k, j] = x[j]
            k += 1
    return k


# -- numpy backend -----------------------------------------------------------


def _numpy_chunks(lo, hi, normals, nums, dens, strict):
    lo_a = np.asarray(lo, dtype=np.int64)
    wid = np.asarray([b - a + 1 for a, b in zip(lo, hi)], dtype=np.int64)
    total = _box_volume(lo, hi)
    A = np.asarray(normals, dtype=np.int64).reshape(len(normals), len(lo))
    p = np.asarray(nums, dtype=np.int64)
    q = np.asarray(dens, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coords = np.stack(np.unravel_index(idx, tuple(int(w) for w in wid)), axis=1)
        coords += lo_a
        lhs = (coords @ A.T) * q
        ok = (lhs < p) if strict else (lhs <= p)
        yield coords[ok.all(axis=1)]


def _count_numpy(lo, hi, normals, nums, dens, strict) -> int:
    return sum(len(c) for c in _numpy_chunks(lo, hi, normals, nums, dens, strict))


def _collect_numpy(lo, hi, normals, nums, dens, strict) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for c in _numpy_chunks(lo, hi, normals, nums, dens, strict):
        out.extend(tuple(int(v) for v in row) for row in c)
    return out


# -- python backend ----------------------------------------------------------


def _member(x, normals, nums, dens, strict) -> bool:
    for row, p, q in zip(normals, nums, dens):
        s = q * sum(c * xi for c, xi in zip(row, x))
        if strict:
            if s >= p:
                return False
        elif s > p:
            return False
    return True


def _iter_python(lo, hi, normals, nums, dens, strict):
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    for x in itertools.product(*ranges):
        if _member(x, normals, nums, dens, strict):
            yield x


# -- public entry points -----------------------------------------------------


def backend_count(name, lo, hi, normals, offsets, strict=False) -> int:
    """Count scan on an explicitly named backend (used by tests/benchmarks)."""
    nums, dens = _split_offsets(offsets)
    if _box_volume(lo, hi) == 0:
        return 0
    if name == "python":
        return sum(1 for _ in _iter_python(lo, hi, normals, nums, dens, strict))
    if not _int64_safe(lo, hi, normals, nums, dens):
        raise OverflowError("scan does not fit int64; use the python backend")
    if name == "numpy":
        return _count_numpy(lo, hi, normals, nums, dens, strict)
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available")
        return int(
            _count_njit(
                np.asarray(lo, dtype=np.int64),
                np.asarray([b - a + 1 for a, b in zip(lo, hi)], dtype=np.int64),
                np.asarray(normals, dtype=np.int64).reshape(len(normals), len(lo)),
                np.asarray(nums, dtype=np.int64),
                np.asarray(dens, dtype=np.int64),
                bool(strict),
            )
        )
    raise ValueError(f"unknown backend {name!r}")


def backend_collect(name, lo, hi, normals, offsets, strict=False) -> list[tuple[int, ...]]:
    """Point-collecting scan on an explicitly named backend (lex order)."""
    nums, dens = _split_offsets(offsets)
    if _box_volume(lo, hi) == 0:
        return []
    if name == "python":
        return list(_iter_python(lo, hi, normals, nums, dens, strict))
    if not _int64_safe(lo, hi, normals, nums, dens):
        raise OverflowError("scan does not fit int64; use the python backend")
    if name == "numpy":
        return _collect_numpy(lo, hi, normals, nums, dens, strict)
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available")
        lo_a = np.asarray(lo, dtype=np.int64)
        wid = np.asarray([b - a + 1 for a, b in zip(lo, hi)], dtype=np.int64)
        A = np.asarray(normals, dtype=np.int64).reshape(len(normals), len(lo))
        p = np.asarray(nums, dtype=np.int64)
        q = np.asarray(dens, dtype=np.int64)
        n = int(_count_njit(lo_a, wid, A, p, q, bool(strict)))
        out = np.empty((n, len(lo)), dtype=np.int64)
        _fill_njit(lo_a, wid, A, p, q, bool(strict), out)
        return [tuple(int(v) for v in row) for row in out]
    raise ValueError(f"unknown backend {name!r}")


def scan_count(lo, hi, normals, offsets, strict=False) -> int:
    nums, dens = _split_offsets(offsets)
    name = resolve_backend(lo, hi, normals, nums, dens)
    return backend_count(name, lo, hi, normals, offsets, strict)


def scan_collect(lo, hi, normals, offsets, strict=False) -> list[tuple[int, ...]]:
    nums, dens = _split_offsets(offsets)
    name = resolve_backend(lo, hi, normals, nums, dens)
    return backend_collect(name, lo, hi, normals, offsets, strict)
