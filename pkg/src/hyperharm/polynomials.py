"""Dense univariate polynomials over exact rationals, plus the complete
Bell polynomials, their signed factorial-weighted variant, and geometric
polynomials."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .rationals import RationalLike, as_rational, binomial
from .stirling import stirling2


class RationalPolynomial:
    """Immutable dense polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are trimmed so
    equal polynomials compare equal, and the zero polynomial has no
    coefficients at all.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> RationalPolynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> RationalPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalPolynomial:
        return -(self - other)

    def __mul__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RationalPolynomial:
        if exponent < 0:
            raise ValueError("polynomial powers must be >= 0")
        result = RationalPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((other,))
        return NotImplemented

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate by Horner's rule."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> RationalPolynomial:
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(i * cs[i] for i in range(1, len(cs)))
        return RationalPolynomial(cs)

    def shifted(self, c: RationalLike) -> RationalPolynomial:
        """Return p(x + c)."""
        shift = RationalPolynomial((c, 1))
        acc = RationalPolynomial.zero()
        for coeff in reversed(self.coeffs):
            acc = acc * shift + coeff
        return acc

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                coeff = "" if mag == 1 else f"{mag}*"
                term = f"{coeff}x" if i == 1 else f"{coeff}x^{i}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def bell_complete(n: int, args: Sequence[RationalLike]) -> Fraction:
    """Complete exponential Bell polynomial Y_n evaluated at args.

    Uses Y_0 = 1 and Y_{n+1} = sum_{k=0}^{n} C(n, k) Y_{n-k} x_{k+1};
    ``args`` must supply at least n values x_1..x_n.
    """
    if n < 0:
        raise ValueError("Bell polynomial order must be >= 0")
    if len(args) < n:
        raise ValueError(f"need at least {n} arguments, got {len(args)}")
    xs = [as_rational(a) for a in args[:n]]
    y = [Fraction(1)]
    for m in range(n):
        y.append(sum((binomial(m, k) * y[m - k] * xs[k] for k in range(m + 1)),
                     Fraction(0)))
    return y[n]


def p_poly(n: int, args: Sequence[RationalLike]) -> Fraction:
    """Signed factorial-weighted Bell variant:
    P_n(x_1..x_n) = (-1)^n Y_n(-0!*x_1, -1!*x_2, ..., -(n-1)!*x_n).

    Small cases: P_1 = x1, P_2 = x1^2 - x2, P_3 = x1^3 - 3*x1*x2 + 2*x3.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    if len(args) < n:
        raise ValueError(f"need at least {n} arguments, got {len(args)}")
    scaled = [-factorial(i) * as_rational(args[i]) for i in range(n)]
    return (-1) ** n * bell_complete(n, scaled)


def geometric_poly(n: int) -> RationalPolynomial:
    """Geometric polynomial w_n(x) = sum_j {n, j} j! x^j."""
    if n < 0:
        raise ValueError("order must be >= 0")
    return RationalPolynomial(
        stirling2(n, j) * factorial(j) for j in range(n + 1)
    )
