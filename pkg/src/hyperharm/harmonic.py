"""The harmonic-number family and Faulhaber hyper-sums.

``gen_hyperharmonic(n, p, r)`` is the r-fold iterated partial sum of
k^(-p), written H_n^(p,r): r = 1 gives the generalized harmonic numbers
H_n^(p), p = 1 gives the hyperharmonic numbers h_n^(r), and negative p
gives integer hyper-sums via H_n^(-p,q+1) = S_p^(q)(n).

Hyper-sums carry four independent evaluation strategies that must agree;
the cross-checks between them are the package's main internal oracle.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polynomials import RationalPolynomial, p_poly
from .stirling import stirling2

_prefix_cache: dict[tuple[int, int], list[Fraction]] = {}
_prefix_lock = threading.RLock()  # _prefix recurses on the depth index


def _prefix(p: int, r: int, n: int) -> list[Fraction]:
    """Cached list [H_0^(p,r), ..., H_n^(p,r)], grown on demand."""
    key = (p, r)
    with _prefix_lock:
        values = _prefix_cache.setdefault(key, [Fraction(0)])
        if len(values) <= n:
            if r == 0:
                for k in range(len(values), n + 1):
                    values.append(Fraction(k) ** -p)
            else:
                lower = _prefix(p, r - 1, n)
                for k in range(len(values), n + 1):
                    values.append(values[k - 1] + lower[k])
        return values


def gen_hyperharmonic(n: int, p: int, r: int) -> Fraction:
    """Generalized hyperharmonic number H_n^(p,r).

    Defined by H_n^(p,r) = sum_{k=1}^{n} H_k^(p,r-1) with
    H_k^(p,0) = 1/k^p; H_0^(p,r) = 0.  Any integer p is allowed.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if r < 0:
        raise ValueError("recursion depth r must be >= 0")
    return _prefix(p, r, n)[n]


def harmonic_generalized(n: int, p: int = 1) -> Fraction:
    """Generalized harmonic number H_n^(p) = sum_{k=1}^{n} 1/k^p."""
    return gen_hyperharmonic(n, p, 1)


def harmonic(n: int) -> Fraction:
    """Harmonic number H_n; H_0 = 0."""
    return gen_hyperharmonic(n, 1, 1)


def hyperharmonic(n: int, r: int) -> Fraction:
    """Hyperharmonic number h_n^(r) = H_n^(1,r), defined for r >= 1 only."""
    if r < 1:
        raise ValueError("hyperharmonic order r must be >= 1")
    return gen_hyperharmonic(n, 1, r)


class HyperSumStrategy(Enum):
    """Independent ways of evaluating the hyper-sum S_p^(q)(n)."""

    RECURSIVE = "recursive"
    BINOMIAL_WEIGHTED = "binomial-weighted"
    STIRLING_DIRECT = "stirling-direct"
    STIRLING_ALTERNATING = "stirling-alternating"


@lru_cache(maxsize=None)
def _hyper_sum_recursive(p: int, q: int, n: int) -> int:
    if q == 0:
        return sum(k**p for k in range(1, n + 1))
    return sum(_hyper_sum_recursive(p, q - 1, k) for k in range(1, n + 1))


def _hyper_sum_binomial(p: int, q: int, n: int) -> int:
    return sum(comb(n + q - k, q) * k**p for k in range(1, n + 1))


def _hyper_sum_stirling_direct(p: int, q: int, n: int) -> int:
    return sum(
        factorial(j) * stirling2(p + 1, j + 1) * comb(n + q, j + q + 1)
        for j in range(p + 1)
    )


def _hyper_sum_stirling_alternating(p: int, q: int, n: int) -> int:
    # The alternating Stirling form starts its sum at j = 1 and therefore
    # only covers p >= 1; for p = 0 the q-fold iterated sum of ones is the
    # single binomial C(n+q, q+1).
    if p == 0:
        return comb(n + q, q + 1)
    return sum(
        (-1) ** (p + j) * stirling2(p, j) * comb(n + q + j, q + j + 1) * factorial(j)
        for j in range(1, p + 1)
    )


_STRATEGIES = {
    HyperSumStrategy.RECURSIVE: _hyper_sum_recursive,
    HyperSumStrategy.BINOMIAL_WEIGHTED: _hyper_sum_binomial,
    HyperSumStrategy.STIRLING_DIRECT: _hyper_sum_stirling_direct,
    HyperSumStrategy.STIRLING_ALTERNATING: _hyper_sum_stirling_alternating,
}


def hyper_sum(
    p: int,
    q: int,
    n: int,
    strategy: HyperSumStrategy = HyperSumStrategy.RECURSIVE,
) -> Fraction:
    """Hyper-sum S_p^(q)(n): the q-fold iterated partial sum of the power
    sums S_p(n) = 1^p + ... + n^p.  All strategies return equal values."""
    if p < 0 or q < 0 or n < 0:
        raise ValueError("p, q, n must all be >= 0")
    return Fraction(_STRATEGIES[strategy](p, q, n))


def p_harmonic(r: int, upper: int, lower: int) -> Fraction:
    """P_r evaluated at the harmonic differences
    x_i = H_upper^(i) - H_lower^(i) for i = 1..r; P_0 = 1."""
    if upper < lower:
        raise ValueError("upper index must be >= lower index")
    args = [
        harmonic_generalized(upper, i) - harmonic_generalized(lower, i)
        for i in range(1, r + 1)
    ]
    return p_poly(r, args)


@lru_cache(maxsize=None)
def hyperharmonic_order_poly(n: int) -> RationalPolynomial:
    """The degree-(n-1) polynomial h_n^(x) in the order x, built from
    h_n^(x) = (1/n!) sum_{i=0}^{n-1} prod_{j != i} (x + j).

    Its value at every integer r >= 1 equals hyperharmonic(n, r).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = RationalPolynomial.zero()
    for i in range(n):
        prod = RationalPolynomial.constant(1)
        for j in range(n):
            if j != i:
                prod = prod * RationalPolynomial((j, 1))
        total = total + prod
    return Fraction(1, factorial(n)) * total


def hyperharmonic_order_derivative(n: int, l: int, q: int) -> Fraction:
    """l-th derivative of h_n^(x+1) with respect to x, evaluated at x = q,
    computed by differentiating the order polynomial."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if l < 0 or q < 0:
        raise ValueError("l and q must be >= 0")
    return hyperharmonic_order_poly(n).derivative(l)(q + 1)
