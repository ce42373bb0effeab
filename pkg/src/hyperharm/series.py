"""Truncated formal power series over exact rationals.

A ``TruncatedSeries`` holds coefficients c_0..c_N for a series taken
mod t^(N+1).  The truncation order is always explicit: arithmetic on
series of different orders truncates to the smaller one, never silently
keeping coefficients that were not computed exactly.

``gf_extract`` builds the right-hand sides of the generating functions
this package cares about from these primitives, giving an oracle that is
independent of the direct (recurrence-based) evaluations it is checked
against.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Iterable

from .polynomials import RationalPolynomial, geometric_poly
from .rationals import RationalLike, as_rational, binomial


class TruncatedSeries:
    """Formal power series c_0 + c_1 t + ... + c_N t^N mod t^(N+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((), order=order)

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> TruncatedSeries:
        return cls((c,), order=order)

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series t."""
        return cls((0, 1), order=order)

    @classmethod
    def from_polynomial(cls, poly: RationalPolynomial, order: int) -> TruncatedSeries:
        return cls(poly.coeffs, order=order)

    @classmethod
    def exp_linear(cls, c: RationalLike, order: int) -> TruncatedSeries:
        """e^(c t): coefficients c^n / n!."""
        c = as_rational(c)
        return cls((c**n / factorial(n) for n in range(order + 1)), order=order)

    @classmethod
    def one_minus_t_power(cls, exponent: int, order: int) -> TruncatedSeries:
        """(1 - t)^exponent for any integer exponent, negative included."""
        return cls(
            ((-1) ** n * binomial(exponent, n) for n in range(order + 1)),
            order=order,
        )

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other, order: int):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, order)
        return None

    def __add__(self, other) -> TruncatedSeries:
        rhs = self._coerce(other, self.order)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TruncatedSeries(
            (self.coeffs[i] + rhs.coeffs[i] for i in range(n + 1)), order=n
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-c for c in self.coeffs), order=self.order)

    def __sub__(self, other) -> TruncatedSeries:
        rhs = self._coerce(other, self.order)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> TruncatedSeries:
        return -(self - other)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(
                (c * other for c in self.coeffs), order=self.order
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, order=n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            raise ValueError("series powers must be >= 0")
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    # -- structural operations -------------------------------------------

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(t)); requires inner to have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        n = min(self.order, inner.order)
        acc = TruncatedSeries.zero(n)
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner + c
        return acc

    def exp(self) -> TruncatedSeries:
        """exp(self); requires zero constant term, so the result is exact."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs constant term 0")
        acc = TruncatedSeries.constant(1, self.order)
        power = TruncatedSeries.constant(1, self.order)
        for k in range(1, self.order + 1):
            power = power * self
            acc = acc + power * Fraction(1, factorial(k))
        return acc

    def log(self) -> TruncatedSeries:
        """log(self); requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        g = self - 1
        acc = TruncatedSeries.zero(self.order)
        power = TruncatedSeries.constant(1, self.order)
        for k in range(1, self.order + 1):
            power = power * g
            acc = acc + power * Fraction((-1) ** (k + 1), k)
        return acc


def polylog_series(p: int, order: int) -> TruncatedSeries:
    """Polylogarithm Li_p(t) = sum_{n>=1} t^n / n^p truncated at ``order``.

    Negative p is exact as well: the coefficient of t^n is n^(-p).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(0)] + [Fraction(n) ** -p for n in range(1, order + 1)]
    return TruncatedSeries(coeffs, order=order)


class GeneratingFunction(Enum):
    """Named generating-function right-hand sides served by gf_extract."""

    POLY_BERNOULLI = "poly-bernoulli"
    GEN_HYPERHARMONIC = "gen-hyperharmonic"
    HYPERHARMONIC = "hyperharmonic"
    R_STIRLING2 = "r-stirling2"
    P_HARMONIC = "p-harmonic"
    GEOMETRIC = "geometric"
    HYPER_SUM_INDEX = "hyper-sum-index"
    HYPERHARMONIC_INDEX = "hyperharmonic-index"


def _gf_poly_bernoulli(order: int, p: int, x: int) -> TruncatedSeries:
    # Li_p(u)/u * e^{xt} with u = 1 - e^{-t}; dividing by u is done by
    # composing with the shifted outer series sum_m v^m / (m+1)^p.
    u = 1 - TruncatedSeries.exp_linear(-1, order)
    outer = TruncatedSeries(
        (Fraction(m + 1) ** -p for m in range(order + 1)), order=order
    )
    return outer.compose(u) * TruncatedSeries.exp_linear(x, order)


def _gf_gen_hyperharmonic(order: int, p: int, q: int) -> TruncatedSeries:
    return polylog_series(p, order) * TruncatedSeries.one_minus_t_power(-q, order)


def _gf_hyperharmonic(order: int, q: int) -> TruncatedSeries:
    return _gf_gen_hyperharmonic(order, 1, q)


def _gf_r_stirling2(order: int, k: int, r: int) -> TruncatedSeries:
    growth = (TruncatedSeries.exp_linear(1, order) - 1) ** k
    return growth * TruncatedSeries.exp_linear(r, order) * Fraction(1, factorial(k))


def _gf_p_harmonic(order: int, r: int, m: int) -> TruncatedSeries:
    return polylog_series(1, order) ** r * TruncatedSeries.one_minus_t_power(
        -(m + 1), order
    )


def _gf_geometric(order: int, n: int) -> TruncatedSeries:
    inv = TruncatedSeries.one_minus_t_power(-1, order)
    t_over = inv * TruncatedSeries.identity(order)
    w = TruncatedSeries.from_polynomial(geometric_poly(n), order)
    return w.compose(t_over) * inv


def _gf_hyper_sum_index(order: int, p: int, n: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(order)
    for j in range(1, n + 1):
        acc = acc + j**p * TruncatedSeries.one_minus_t_power(j, order)
    return acc * TruncatedSeries.one_minus_t_power(-(n + 1), order)


def _gf_hyperharmonic_index(order: int, n: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(order)
    for j in range(1, n + 1):
        acc = acc + Fraction(1, j) * TruncatedSeries.one_minus_t_power(j, order)
    return acc * TruncatedSeries.one_minus_t_power(-(n + 1), order)


_GF_BUILDERS = {
    GeneratingFunction.POLY_BERNOULLI: _gf_poly_bernoulli,
    GeneratingFunction.GEN_HYPERHARMONIC: _gf_gen_hyperharmonic,
    GeneratingFunction.HYPERHARMONIC: _gf_hyperharmonic,
    GeneratingFunction.R_STIRLING2: _gf_r_stirling2,
    GeneratingFunction.P_HARMONIC: _gf_p_harmonic,
    GeneratingFunction.GEOMETRIC: _gf_geometric,
    GeneratingFunction.HYPER_SUM_INDEX: _gf_hyper_sum_index,
    GeneratingFunction.HYPERHARMONIC_INDEX: _gf_hyperharmonic_index,
}


def gf_extract(
    which: GeneratingFunction, order: int, **params: int
) -> list[Fraction]:
    """First ``order + 1`` coefficients of the named generating function.

    Coefficient meanings, by name (params in brackets):

    - POLY_BERNOULLI [p, x]:      c_n = B_n^(p)(x) / n!
    - GEN_HYPERHARMONIC [p, q]:   c_n = H_n^(p,q)
    - HYPERHARMONIC [q]:          c_n = h_n^(q)
    - R_STIRLING2 [k, r]:         c_n = {n+r, k+r}_r / n!
    - P_HARMONIC [r, m]:          c_k = C(m+k, m) P_r at harmonic diffs
    - GEOMETRIC [n]:              c_k = k^n for k >= 1 (n >= 1)
    - HYPER_SUM_INDEX [p, n]:     c_k = S_p^(k)(n)
    - HYPERHARMONIC_INDEX [n]:    c_k = h_n^(k+1)
    """
    try:
        builder = _GF_BUILDERS[which]
    except (KeyError, TypeError):
        raise ValueError(f"unknown generating function {which!r}") from None
    if order < 0:
        raise ValueError("order must be >= 0")
    return list(builder(order, **params).coeffs)
