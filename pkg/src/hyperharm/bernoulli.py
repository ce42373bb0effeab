"""Bernoulli and poly-Bernoulli numbers and polynomials, exact for every
integer order index p (positive, zero, or negative).

Sign convention trap worth spelling out once: the generating function
t/(e^t - 1) forces B_1 = -1/2, while the order-1 poly-Bernoulli number is
B_1^(1) = +1/2.  The two families are reconciled by the argument shift
B_n^(1)(x - 1) = B_n(x); nothing here silently equates them at n = 1.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polynomials import RationalPolynomial
from .stirling import stirling2

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Computed by the defining recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0
    for n >= 1, with all values cached.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n >= len(_bernoulli_cache):
        with _bernoulli_lock:
            while len(_bernoulli_cache) <= n:
                m = len(_bernoulli_cache)
                acc = sum(
                    (comb(m + 1, k) * _bernoulli_cache[k] for k in range(m)),
                    Fraction(0),
                )
                _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """Bernoulli polynomial B_n(x) = sum_k C(n, k) B_k x^(n-k)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return RationalPolynomial(coeffs)


@lru_cache(maxsize=None)
def poly_bernoulli_number(n: int, p: int) -> Fraction:
    """Poly-Bernoulli number B_n^(p), any integer p.

    Uses the Stirling closed form
    B_n^(p) = (-1)^n sum_k {n, k} (-1)^k k! / (k+1)^p,
    where (k+1)^p is an exact rational power (so negative p is exact too).
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    total = Fraction(0)
    for k in range(n + 1):
        total += stirling2(n, k) * (-1) ** k * factorial(k) * Fraction(k + 1) ** -p
    return (-1) ** n * total


@lru_cache(maxsize=None)
def poly_bernoulli_polynomial(n: int, p: int) -> RationalPolynomial:
    """Poly-Bernoulli polynomial B_n^(p)(x) = sum_k C(n, k) B_k^(p) x^(n-k)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * poly_bernoulli_number(k, p)
    return RationalPolynomial(coeffs)


def poly_bernoulli_neg_closed(n: int, p: int, q: int) -> Fraction:
    """Negative-order poly-Bernoulli polynomial value
    B_n^(-p)(q) = sum_{j=1}^{p} {p, j} (-1)^(p+j) j! (j+q+1)^n.

    The sum is empty for p == 0 and returns 0; the p == 0 polynomial
    itself evaluates to (q+1)^n, so cross-checks against the polynomial
    route apply for p >= 1 only.
    """
    if n < 0 or p < 0 or q < 0:
        raise ValueError("indices must be >= 0")
    total = 0
    for j in range(1, p + 1):
        total += stirling2(p, j) * (-1) ** (p + j) * factorial(j) * (j + q + 1) ** n
    return Fraction(total)
