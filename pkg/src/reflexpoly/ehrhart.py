"""Lattice-count sequences, quasi-polynomial reconstruction, and the
reciprocity / symmetry criteria built on them.

The dilation counter L(n) = #(nP meet Z^d) is evaluated by exact scans.  The
quasi-polynomial is reconstructed per residue class mod the lcm of vertex
denominators, validated on held-out counts, then reduced to its minimal
period, so ``period == 1`` is a decided property, not a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _poly
from .errors import InternalInconsistency, PeriodNotOne, ValidationFailed
from .polytope import Polytope, count_lattice_points, dilate
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class QuasiPolynomial:
    """Periodic list of constituent polynomials; value at n comes from the
    constituent at index n mod period.  The stored period is minimal."""

    period: int
    constituents: tuple[tuple[Fraction, ...], ...]
    degree: int

    def __post_init__(self):
        if self.period != len(self.constituents) or self.period < 1:
            raise ValueError("period must match the number of constituents")

    def evaluate(self, n: int) -> Fraction:
        return _poly.evaluate(self.constituents[n % self.period], n)

    def is_polynomial(self) -> bool:
        return self.period == 1

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "constituents": [
                [format_rational(c) for c in poly] for poly in self.constituents
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuasiPolynomial":
        consts = [
            _poly.trim([parse_rational(c) for c in poly]) for poly in obj["constituents"]
        ]
        if len(consts) != int(obj["period"]):
            raise ValueError("period does not match constituent count")
        return cls.from_constituents(consts)

    @classmethod
    def from_constituents(cls, constituents) -> "QuasiPolynomial":
        """Build with the period minimized by structural comparison."""
        consts = [_poly.trim(c) for c in constituents]
        T = len(consts)
        for t in sorted(_divisors(T)):
            if all(consts[r] == consts[r % t] for r in range(T)):
                consts = consts[:t]
                break
        degree = max(len(c) - 1 for c in consts)
        return cls(period=len(consts), constituents=tuple(consts), degree=degree)

    def __str__(self) -> str:
        if self.period == 1:
            return _poly.format_poly(self.constituents[0])
        lines = [
            f"n = {r} (mod {self.period}): {_poly.format_poly(c)}"
            for r, c in enumerate(self.constituents)
        ]
        return "; ".join(lines)


@dataclass(frozen=True)
class CountSequence:
    """L(n) for 0 <= n <= n_max and interior counts for 1 <= n <= n_max."""

    values: dict[int, int]
    interior_values: dict[int, int]


def _divisors(n: int) -> list[int]:
    return [t for t in range(1, n + 1) if n % t == 0]


def count(p: Polytope, n: int, budget: int | None = None) -> int:
    """#(nP meet Z^d); the empty dilation n = 0 counts the origin, so 1."""
    if n < 0:
        raise ValueError("count is defined for n >= 0; use evaluate for negatives")
    if n == 0:
        return 1
    return count_lattice_points(dilate(p, n), strict=False, budget=budget)


def count_interior(p: Polytope, n: int, budget: int | None = None) -> int:
    """#(int(nP) meet Z^d) for n >= 1."""
    if n < 1:
        raise ValueError("interior count is defined for n >= 1")
    return count_lattice_points(dilate(p, n), strict=True, budget=budget)


def count_sequence(p: Polytope, n_max: int, budget: int | None = None) -> CountSequence:
    return CountSequence(
        values={n: count(p, n, budget) for n in range(0, n_max + 1)},
        interior_values={n: count_interior(p, n, budget) for n in range(1, n_max + 1)},
    )


def vertex_denominator_lcm(p: Polytope) -> int:
    out = 1
    for v in p.vrep:
        for c in v:
            out = lcm(out, c.denominator)
    return out


def ehrhart_quasi_polynomial(p: Polytope, budget: int | None = None) -> QuasiPolynomial:
    """Reconstruct the counting quasi-polynomial of p.

    For each residue r mod T (T = lcm of vertex coordinate denominators, a
    period bound) the degree-<=d constituent is interpolated from d+1 counts
    and validated on d held-out counts; any mismatch aborts, since it would
    mean the kernel counted wrong.  The period is then minimized.
    """
    d = p.dim
    T = vertex_denominator_lcm(p)
    constituents = []
    for r in range(T):
        xs = [r + k * T for k in range(d + 1)]
        ys = [count(p, n, budget) for n in xs]
        poly = _poly.lagrange(xs, ys)
        for k in range(d + 1, 2 * d + 1):
            n = r + k * T
            expected = count(p, n, budget)
            got = _poly.evaluate(poly, n)
            if got != expected:
                raise ValidationFailed(
                    "interpolant disagrees with a held-out count",
                    residue=r,
                    n=n,
                    interpolated=got,
                    counted=expected,
                )
        constituents.append(poly)
    qp = QuasiPolynomial.from_constituents(constituents)
    if qp.degree != d:
        raise ValidationFailed(
            "quasi-polynomial degree differs from the ambient dimension",
            degree=qp.degree,
            dim=d,
        )
    return qp


def evaluate(q: QuasiPolynomial, n: int) -> Fraction:
    """Exact evaluation at any integer, negative included."""
    return q.evaluate(n)


def is_quasi_lattice(p: Polytope, budget: int | None = None) -> bool:
    """True when the counting quasi-polynomial has minimal period 1."""
    return ehrhart_quasi_polynomial(p, budget).is_polynomial()


def reciprocity_check(p: Polytope, n_max: int, budget: int | None = None) -> bool:
    """Evaluate the reciprocity law q(-n) = (-1)^d * #(int(nP) meet Z^d)
    for 1 <= n <= n_max.  Failure indicates an implementation bug."""
    q = ehrhart_quasi_polynomial(p, budget)
    sign = (-1) ** p.dim
    return all(
        q.evaluate(-n) == sign * count_interior(p, n, budget) for n in range(1, n_max + 1)
    )


def hibi_symmetry_check(p: Polytope, n_max: int, budget: int | None = None) -> bool:
    """Hibi's palindromic criterion, computed two provably-equivalent ways.

    Count form:       L(n) == #(int((n+1)P) meet Z^d)   for 0 <= n <= n_max
    Quasi-poly form:  q(n) == (-1)^d q(-n-1)            on the same range

    The two formulations are tied together by reciprocity; a disagreement
    is an internal error, never a mathematical finding.
    """
    q = ehrhart_quasi_polynomial(p, budget)
    sign = (-1) ** p.dim
    count_form = all(
        count(p, n, budget) == count_interior(p, n + 1, budget) for n in range(0, n_max + 1)
    )
    qp_form = all(
        q.evaluate(n) == sign * q.evaluate(-n - 1) for n in range(0, n_max + 1)
    )
    if count_form != qp_form:
        raise InternalInconsistency(
            "count form and quasi-polynomial form of the symmetry test disagree",
            count_form=count_form,
            qp_form=qp_form,
        )
    return count_form


def hilbert_symmetry_check(q: QuasiPolynomial, d: int, n_max: int) -> bool:
    """For a genuine polynomial, test q(n) == (-1)^d q(-n-1) both on the
    sample range and as a coefficient identity of q(x) - (-1)^d q(-x-1)."""
    if q.period != 1:
        raise PeriodNotOne("symmetry test requires a genuine polynomial", period=q.period)
    sign = (-1) ** d
    values_ok = all(q.evaluate(n) == sign * q.evaluate(-n - 1) for n in range(0, n_max + 1))
    coeffs = q.constituents[0]
    reflected = _poly.scale(_poly.compose_affine(coeffs, -1, -1), sign)
    identity_ok = _poly.sub(coeffs, reflected) == (Fraction(0),)
    return values_ok and identity_ok
