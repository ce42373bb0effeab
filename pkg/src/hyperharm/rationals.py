"""Exact rational scalars, generalized binomials and rational congruences.

Every quantity in this package is an exact integer or a reduced
``fractions.Fraction``; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction

RationalLike = Fraction | int


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to a Fraction (already-reduced by type)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rising_factorial(base: RationalLike, length: int) -> Fraction:
    """base * (base+1) * ... * (base+length-1); the empty product is 1."""
    if length < 0:
        raise ValueError("rising factorial length must be >= 0")
    result = Fraction(1)
    x = as_rational(base)
    for i in range(length):
        result *= x + i
    return result


def falling_factorial(base: RationalLike, length: int) -> Fraction:
    """base * (base-1) * ... * (base-length+1); the empty product is 1."""
    if length < 0:
        raise ValueError("falling factorial length must be >= 0")
    result = Fraction(1)
    x = as_rational(base)
    for i in range(length):
        result *= x - i
    return result


def binomial(upper: RationalLike, lower: int) -> Fraction:
    """Generalized binomial coefficient C(upper, lower).

    ``upper`` may be any rational (negative integers included); ``lower``
    must be a non-negative integer.  Integer uppers with
    0 <= upper < lower give 0, matching the combinatorial convention.
    """
    if lower < 0:
        raise ValueError("binomial lower index must be >= 0")
    return falling_factorial(upper, lower) / factorial(lower)


def rational_congruent(x: RationalLike, y: RationalLike, m: int) -> bool:
    """Whether x = a/b and y = c/d satisfy m | (a*d - b*c).

    Both sides are taken in reduced form with positive denominator, which
    ``Fraction`` guarantees.  On integers this is ordinary congruence mod m.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    x = as_rational(x)
    y = as_rational(y)
    return (x.numerator * y.denominator - x.denominator * y.numerator) % m == 0


def is_m_integer(x: RationalLike, m: int) -> bool:
    """Whether the reduced denominator of x is not divisible by m."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    return as_rational(x).denominator % m != 0
