"""Exact rational convex polytopes in canonical dual representation.

A polytope is stored with both descriptions at once:

  * ``hrep``: the irredundant facet list {x : <x, u> <= b} with primitive
    integer outward normals u and tight rational support values b, sorted
    lexicographically by normal;
  * ``vrep``: the exact vertex list, sorted lexicographically.

Canonical form makes equality of polytopes a structural comparison.  Only
full-dimensional bounded sets are first-class; everything else raises.  All
arithmetic is exact: conversions run Gaussian elimination over Fraction, and
lattice-point scans reduce each facet test to integer comparisons (see
``_scan`` for the accelerated backends).

Supported desk scale is ambient dimension <= 4 with enumeration boxes up to
the configurable budget (default 10^7 points, env var REFLEX_BUDGET).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg, _scan
from .errors import (
    CollapsedPolytope,
    EmptyInput,
    InvalidInput,
    LowerDimensional,
    NonPositiveFactor,
    OriginNotInterior,
    ScaleExceeded,
    UnboundedInput,
)
from .rationals import format_rational, format_vector, parse_rational, parse_vector

DEFAULT_BUDGET = 10_000_000

# combinatorial guard: C(m, d) blows up fast, keep inputs at desk scale
_MAX_HALFSPACES = 64
_MAX_POINTS = 64


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("REFLEX_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class HalfSpace:
    """{x : <x, normal> <= offset} with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction


@dataclass(frozen=True)
class LatticePointSet:
    points: tuple[tuple[int, ...], ...]
    count: int


@dataclass(frozen=True)
class Polytope:
    dim: int
    hrep: tuple[HalfSpace, ...]
    vrep: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "hrep": [
                {"normal": list(h.normal), "offset": format_rational(h.offset)}
                for h in self.hrep
            ],
            "vrep": [format_vector(v) for v in self.vrep],
        }

    def __str__(self) -> str:
        facets = ", ".join(
            f"<x,{list(h.normal)}> <= {format_rational(h.offset)}" for h in self.hrep
        )
        return f"Polytope(dim={self.dim}, facets=[{facets}])"


# -- canonicalization internals ----------------------------------------------


def _normalize_halfspaces(halfspaces, dim: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """Primitivize normals, scale offsets, drop trivial rows, dedupe parallels."""
    cleaned: dict[tuple[int, ...], Fraction] = {}
    for normal, offset in halfspaces:
        vec = parse_vector(normal)
        if len(vec) != dim:
            raise InvalidInput("normal length does not match dimension", normal=vec, dim=dim)
        b = parse_rational(offset)
        if all(c == 0 for c in vec):
            if b < 0:
                raise EmptyInput("constraint 0 <= negative is infeasible", offset=b)
            continue
        prim, scale = _linalg.primitive_integer_vector(vec)
        b = b * scale
        if prim in cleaned:
            cleaned[prim] = min(cleaned[prim], b)
        else:
            cleaned[prim] = b
    return sorted(cleaned.items())


def _fm_feasible(constraints: Sequence[tuple[Sequence[Fraction], Fraction]], dim: int) -> bool:
    """Fourier-Motzkin feasibility for <x,c> <= b systems (exact, small d)."""
    cons = [([Fraction(x) for x in c], Fraction(b)) for c, b in constraints]
    for k in range(dim):
        pos = [(c, b) for c, b in cons if c[k] > 0]
        neg = [(c, b) for c, b in cons if c[k] < 0]
        zero = [(c, b) for c, b in cons if c[k] == 0]
        new = zero
        for cp, bp in pos:
            for cn, bn in neg:
                t1, t2 = -cn[k], cp[k]
                new.append(
                    ([a * t1 + b_ * t2 for a, b_ in zip(cp, cn)], bp * t1 + bn * t2)
                )
        cons = new
    return all(b >= 0 for _, b in cons)


def _satisfies_all(point, rows, strict=False) -> bool:
    for normal, offset in rows:
        val = sum(Fraction(c) * x for c, x in zip(normal, point))
        if strict:
            if val >= offset:
                return False
        elif val > offset:
            return False
    return True


def _recession_direction(normals: Sequence[tuple[int, ...]], dim: int):
    """A nonzero direction w with <w,u> <= 0 for every normal u, if one exists.

    With normals of full rank the recession cone is pointed, so any nonzero
    cone member forces an extreme ray cut out by dim-1 independent normals.
    """
    if dim == 1:
        for w in ((1,), (-1,)):
            if all(w[0] * u[0] <= 0 for u in normals):
                return w
        return None
    for subset in itertools.combinations(normals, dim - 1):
        direction = _linalg.nullspace_direction(subset, dim)
        if direction is None:
            continue
        prim, _ = _linalg.primitive_integer_vector(direction)
        for w in (prim, tuple(-x for x in prim)):
            if all(sum(wi * ui for wi, ui in zip(w, u)) <= 0 for u in normals):
                return w
    return None


def _enumerate_vertices(rows, dim: int) -> list[tuple[Fraction, ...]]:
    seen: dict[tuple[Fraction, ...], None] = {}
    for subset in itertools.combinations(rows, dim):
        sol = _linalg.solve_square([r[0] for r in subset], [r[1] for r in subset])
        if sol is None:
            continue
        point = tuple(sol)
        if point not in seen and _satisfies_all(point, rows):
            seen[point] = None
    return list(seen)


def _facets_from_vertices(
    dim: int,
    vertices: Sequence[tuple[Fraction, ...]],
    candidate_normals: Iterable[tuple[int, ...]],
) -> list[HalfSpace]:
    facets: dict[tuple[int, ...], Fraction] = {}
    for u in candidate_normals:
        if u in facets:
            continue
        values = [sum(c * x for c, x in zip(u, v)) for v in vertices]
        b = max(values)
        tight = [v for v, val in zip(vertices, values) if val == b]
        if len(tight) >= dim and _linalg.affine_rank(tight) == dim - 1:
            facets[u] = b
    return [HalfSpace(u, b) for u, b in sorted(facets.items())]


def _assemble(dim: int, vertices, facets) -> Polytope:
    return Polytope(
        dim=dim,
        hrep=tuple(facets),
        vrep=tuple(sorted(tuple(v) for v in vertices)),
    )


# -- constructors --------------------------------------------------------------


def from_hrep(halfspaces, dim: int) -> Polytope:
    """Canonical polytope from halfspaces (rational normal vector, offset).

    Raises EmptyInput / UnboundedInput / LowerDimensional when the
    intersection is not a full-dimensional bounded polytope.
    """
    if not halfspaces:
        raise InvalidInput("need at least one halfspace")
    if len(halfspaces) > _MAX_HALFSPACES:
        raise InvalidInput("too many halfspaces for desk scale", count=len(halfspaces))
    rows = _normalize_halfspaces(halfspaces, dim)
    if not rows:
        raise UnboundedInput("no effective constraints")
    normals = [u for u, _ in rows]
    if _linalg.rank(normals) < dim:
        if _fm_feasible(rows, dim):
            raise UnboundedInput("constraint normals do not span the space")
        raise EmptyInput("halfspace intersection is infeasible")
    vertices = _enumerate_vertices(rows, dim)
    if not vertices:
        raise EmptyInput("halfspace intersection is infeasible")
    direction = _recession_direction(normals, dim)
    if direction is not None:
        raise UnboundedInput("recession direction found", direction=direction)
    if _linalg.affine_rank(vertices) < dim:
        raise LowerDimensional(
            "intersection is not full-dimensional", rank=_linalg.affine_rank(vertices)
        )
    return _assemble(dim, vertices, _facets_from_vertices(dim, vertices, normals))


def from_vrep(points) -> Polytope:
    """Canonical polytope as the convex hull of rational points.

    Non-vertex points are discarded; a hull of deficient dimension raises
    LowerDimensional.
    """
    pts = [parse_vector(p) for p in points]
    if not pts:
        raise InvalidInput("need at least one point")
    if len(pts) > _MAX_POINTS:
        raise InvalidInput("too many points for desk scale", count=len(pts))
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise InvalidInput("points have mixed dimensions")
    pts = list(dict.fromkeys(pts))
    if _linalg.affine_rank(pts) < dim:
        raise LowerDimensional("convex hull is not full-dimensional")

    candidates: dict[tuple[int, ...], Fraction] = {}
    for subset in itertools.combinations(pts, dim):
        base = subset[0]
        diffs = [[a - b for a, b in zip(p, base)] for p in subset[1:]]
        direction = _linalg.nullspace_direction(diffs, dim) if dim > 1 else (Fraction(1),)
        if direction is None or all(x == 0 for x in direction):
            continue
        prim, _ = _linalg.primitive_integer_vector(direction)
        level = sum(c * x for c, x in zip(prim, base))
        values = [sum(c * x for c, x in zip(prim, p)) for p in pts]
        if max(values) == level:
            candidates.setdefault(prim, level)
        if min(values) == level:
            neg = tuple(-c for c in prim)
            candidates.setdefault(neg, -level)

    facets = [HalfSpace(u, b) for u, b in sorted(candidates.items())]
    rows = [(h.normal, h.offset) for h in facets]
    vertices = []
    for p in pts:
        tight = [u for u, b in rows if sum(c * x for c, x in zip(u, p)) == b]
        if len(tight) >= dim and _linalg.rank(tight) == dim:
            vertices.append(p)
    return _assemble(dim, vertices, facets)


def from_json(obj: dict) -> Polytope:
    """Rebuild a polytope from its JSON form; hrep is preferred, and when
    both representations are given they must describe the same set."""
    if not isinstance(obj, dict):
        raise InvalidInput("polytope JSON must be an object")
    hrep = obj.get("hrep")
    vrep = obj.get("vrep")
    dim = obj.get("dim")
    if hrep:
        if dim is None:
            dim = len(hrep[0]["normal"])
        poly = from_hrep([(h["normal"], h["offset"]) for h in hrep], int(dim))
        if vrep:
            given = sorted(parse_vector(v) for v in vrep)
            if tuple(given) != poly.vrep:
                raise InvalidInput("hrep and vrep describe different polytopes")
        return poly
    if vrep:
        poly = from_vrep(vrep)
        if dim is not None and poly.dim != int(dim):
            raise InvalidInput("dim field does not match vertex length")
        return poly
    raise InvalidInput("polytope JSON needs 'hrep' or 'vrep'")


# -- elementary operations -----------------------------------------------------


def polar_dual(p: Polytope) -> Polytope:
    """conv(u/b over facets); requires the origin strictly interior."""
    if any(h.offset <= 0 for h in p.hrep):
        raise OriginNotInterior(
            "polar dual needs 0 in the interior; translate first",
            offsets=[h.offset for h in p.hrep],
        )
    duals = [tuple(Fraction(c) / h.offset for c in h.normal) for h in p.hrep]
    return from_vrep(duals)


def translate(p: Polytope, v) -> Polytope:
    """Shift by a rational vector: vertices move, offsets gain <v, u>."""
    vec = parse_vector(v)
    if len(vec) != p.dim:
        raise InvalidInput("translation vector has wrong length")
    hrep = tuple(
        HalfSpace(h.normal, h.offset + sum(c * x for c, x in zip(h.normal, vec)))
        for h in p.hrep
    )
    vrep = tuple(tuple(a + b for a, b in zip(vertex, vec)) for vertex in p.vrep)
    return Polytope(p.dim, hrep, vrep)


def dilate(p: Polytope, factor) -> Polytope:
    """Scale by a positive rational: vertices and offsets multiply."""
    f = parse_rational(factor)
    if f <= 0:
        raise NonPositiveFactor("dilation factor must be positive", factor=f)
    hrep = tuple(HalfSpace(h.normal, h.offset * f) for h in p.hrep)
    vrep = tuple(tuple(x * f for x in vertex) for vertex in p.vrep)
    return Polytope(p.dim, hrep, vrep)


def round_down(p: Polytope) -> Polytope:
    """Floor every canonical support value; collapse is an explicit error."""
    rows = [(h.normal, Fraction(math.floor(h.offset))) for h in p.hrep]
    try:
        return from_hrep(rows, p.dim)
    except (EmptyInput, LowerDimensional) as exc:
        raise CollapsedPolytope(
            "round-down emptied or flattened the polytope", cause=type(exc).__name__
        ) from exc


def round_up(p: Polytope) -> Polytope:
    """Ceil every canonical support value (always contains the original)."""
    rows = [(h.normal, Fraction(math.ceil(h.offset))) for h in p.hrep]
    return from_hrep(rows, p.dim)


def normal_fan_rays(p: Polytope) -> list[tuple[tuple[int, ...], Fraction]]:
    """The rays of the normal fan with their support values: the canonical
    (primitive normal, tight offset) pairs."""
    return [(h.normal, h.offset) for h in p.hrep]


# -- lattice points --------------------------------------------------------------


def integer_bounding_box(p: Polytope) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lo = tuple(math.ceil(min(v[j] for v in p.vrep)) for j in range(p.dim))
    hi = tuple(math.floor(max(v[j] for v in p.vrep)) for j in range(p.dim))
    return lo, hi


def _scan_args(p: Polytope):
    normals = tuple(h.normal for h in p.hrep)
    offsets = tuple(h.offset for h in p.hrep)
    return normals, offsets


def _check_budget(lo, hi, budget) -> None:
    vol = 1
    for a, b in zip(lo, hi):
        vol *= max(0, b - a + 1)
    limit = enumeration_budget(budget)
    if vol > limit:
        raise ScaleExceeded("bounding box exceeds enumeration budget", box=vol, budget=limit)


def lattice_points(p: Polytope, strict: bool = False, budget: int | None = None) -> LatticePointSet:
    """All integer points of p (strict: of its interior), in lex order."""
    lo, hi = integer_bounding_box(p)
    _check_budget(lo, hi, budget)
    normals, offsets = _scan_args(p)
    pts = _scan.scan_collect(lo, hi, normals, offsets, strict)
    return LatticePointSet(points=tuple(pts), count=len(pts))


def count_lattice_points(p: Polytope, strict: bool = False, budget: int | None = None) -> int:
    """Like lattice_points but without materializing the point list."""
    lo, hi = integer_bounding_box(p)
    _check_budget(lo, hi, budget)
    normals, offsets = _scan_args(p)
    return _scan.scan_count(lo, hi, normals, offsets, strict)


def count_in_box(halfspaces, lo, hi, strict: bool = False, budget: int | None = None) -> int:
    """Count integer points of an arbitrary halfspace system over an explicit
    box.  Unlike the Polytope constructors this accepts empty or
    lower-dimensional solution sets; the caller owns the box."""
    _check_budget(lo, hi, budget)
    normals = []
    offsets = []
    for normal, offset in halfspaces:
        u = tuple(int(c) for c in normal)
        normals.append(u)
        offsets.append(parse_rational(offset))
    return _scan.scan_count(tuple(lo), tuple(hi), tuple(normals), tuple(offsets), strict)
