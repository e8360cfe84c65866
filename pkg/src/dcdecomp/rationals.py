"""Exact rational scalars and points.

Scalars are ``fractions.Fraction`` (always in lowest terms, denominator >= 1);
points are tuples of Fractions.  Helpers here normalize inputs, serialize to
the "p/q" string form, and clear denominators for the integer kernels.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd, lcm

Rational = Fraction
Point = tuple[Fraction, ...]
IntVec = tuple[int, ...]


def rat(value) -> Fraction:
    """Coerce ints, strings like "3/4", or Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def point(*coords) -> Point:
    """Build an immutable rational point from scalar-like coordinates."""
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    if not coords:
        raise ValueError("points must have dimension >= 1")
    return tuple(rat(c) for c in coords)


def format_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def is_integral(x: Point) -> bool:
    return all(c.denominator == 1 for c in x)


def as_int_vec(x: Point) -> IntVec:
    if not is_integral(x):
        raise ValueError(f"point {x} is not integral")
    return tuple(c.numerator for c in x)


def floor_vec(x: Point) -> IntVec:
    return tuple(floor(c) for c in x)


def ceil_vec(x: Point) -> IntVec:
    return tuple(ceil(c) for c in x)


def add(x: Point, y: Point) -> Point:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Point, y: Point) -> Point:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def dot(x, y) -> Fraction:
    return sum((a * b for a, b in zip(x, y, strict=True)), Fraction(0))


def idot(x: IntVec, y: IntVec) -> int:
    return sum(a * b for a, b in zip(x, y))


def scale_to_int(values) -> tuple[int, ...]:
    """Clear denominators: return integer multiples of the given rationals.

    The scaling factor is the lcm of the denominators, so ratios are preserved
    exactly.
    """
    values = [rat(v) for v in values]
    mult = lcm(*(v.denominator for v in values)) if values else 1
    return tuple(int(v * mult) for v in values)


def primitive(vec) -> IntVec:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    vec = tuple(int(v) for v in vec)
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g <= 1:
        return vec
    return tuple(v // g for v in vec)
