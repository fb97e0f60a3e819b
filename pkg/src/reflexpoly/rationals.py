"""Exact rational scalars and their canonical string form.

All rational quantities in this package are `fractions.Fraction` values,
which Python keeps in lowest terms with a positive denominator.  The wire
format is the string "p/q" (just "p" when q = 1).  Floats are rejected
everywhere: the criteria implemented here distinguish 1 from 1/k.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    """Parse "p/q", "p", or an int into a Fraction.  Floats are refused."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError("floating point input is not accepted; pass 'p/q' strings")
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not a rational: {value!r}")


def parse_vector(values: Sequence) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def format_vector(vec: Iterable[Fraction]) -> list[str]:
    return [format_rational(c) for c in vec]


def lcm_denominators(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out
