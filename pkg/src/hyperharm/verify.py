"""Registry of named identity and congruence checks with sweep execution.

Each check evaluates both sides of one identity exactly (or tests a
rational congruence) for a single parameter assignment; ``run_sweep``
executes a Cartesian sweep over inclusive integer ranges, filtering
parameters that must be prime and assignments outside a check's domain.
Sweeps are deterministic: the same ranges always produce the same report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, perm
from typing import Callable, Iterable, Mapping

from .bernoulli import (
    bernoulli_number,
    bernoulli_polynomial,
    poly_bernoulli_neg_closed,
    poly_bernoulli_number,
    poly_bernoulli_polynomial,
)
from .harmonic import (
    gen_hyperharmonic,
    harmonic,
    harmonic_generalized,
    hyper_sum,
    hyperharmonic,
    hyperharmonic_order_derivative,
    p_harmonic,
)
from .rationals import binomial, rational_congruent
from .stirling import stirling1_r, stirling2, stirling2_r


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check instance: both sides and the verdict."""

    check_name: str
    params: dict[str, int]
    lhs: Fraction
    rhs: Fraction
    holds: bool
    note: str | None = None


@dataclass(frozen=True)
class SweepReport:
    """Aggregate outcome of a parameter sweep for one check."""

    check_name: str
    total: int
    failures: tuple[CheckResult, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    param_names: tuple[str, ...]
    defaults: dict[str, tuple[int, int]]
    evaluate: Callable[..., CheckResult]
    modulus_param: str | None = None
    prime_params: tuple[str, ...] = ()
    admissible: Callable[..., bool] | None = None
    domain_doc: str = ""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _pbp_value(n: int, p: int, x: int) -> Fraction:
    return poly_bernoulli_polynomial(n, p)(x)


@lru_cache(maxsize=None)
def _bernoulli_value(n: int, x: int) -> Fraction:
    return bernoulli_polynomial(n)(x)


def _identity(name: str, params: dict[str, int], lhs: Fraction, rhs: Fraction,
              note: str | None = None, extra_holds: bool = True) -> CheckResult:
    return CheckResult(name, params, lhs, rhs, lhs == rhs and extra_holds, note)


def _congruence(name: str, params: dict[str, int], lhs: Fraction, rhs: Fraction,
                modulus: int, note: str | None = None) -> CheckResult:
    return CheckResult(
        name, params, lhs, rhs, rational_congruent(lhs, rhs, modulus), note
    )


# --------------------------------------------------------------------------
# evaluators


def _eval_eq_1_1(n: int) -> CheckResult:
    lhs = sum(
        ((-1) ** k * stirling1_r(n, k, 1) * bernoulli_number(k)
         for k in range(n + 1)),
        Fraction(0),
    )
    rhs = factorial(n) * harmonic(n + 1)
    return _identity("eq-1.1", {"n": n}, lhs, rhs)


def _eval_eq_hsb(n: int, r: int) -> CheckResult:
    lhs = sum(
        (stirling1_r(n, k, r) * bernoulli_number(k) for k in range(n + 1)),
        Fraction(0),
    )
    rhs = factorial(n) * gen_hyperharmonic(n + 1, 1, r - 1)
    return _identity("eq-HSB", {"n": n, "r": r}, lhs, rhs)


def _eval_thm_gh_pb(n: int, r: int, p: int, q: int) -> CheckResult:
    lhs = sum(
        (stirling1_r(n, k, r) * _pbp_value(k, p, q) for k in range(n + 1)),
        Fraction(0),
    )
    rhs = factorial(n) * gen_hyperharmonic(n + 1, p, q + r)
    return _identity("thm-gh-pB", {"n": n, "r": r, "p": p, "q": q}, lhs, rhs)


def _eval_cor_hpb(n: int, p: int) -> CheckResult:
    lhs = sum(
        (stirling1_r(n, k, 1) * poly_bernoulli_number(k, p)
         for k in range(n + 1)),
        Fraction(0),
    )
    rhs = factorial(n) * harmonic_generalized(n + 1, p)
    return _identity("cor-hpb", {"n": n, "p": p}, lhs, rhs)


def _eval_pb_gh_inverse(n: int, r: int, p: int, q: int) -> CheckResult:
    lhs = _pbp_value(n, p, q + 1 - r)
    rhs = sum(
        ((-1) ** (n - k) * stirling2_r(n, k, r) * factorial(k)
         * gen_hyperharmonic(k + 1, p, q + 1) for k in range(n + 1)),
        Fraction(0),
    )
    return _identity(
        "eq-pB-gh-inverse", {"n": n, "r": r, "p": p, "q": q}, lhs, rhs
    )


def _eval_prop_alt_sum(n: int, p: int, q: int) -> CheckResult:
    half = Fraction(2) ** -p
    lhs = sum(
        ((-1) ** k * binomial(q + k - 1, k) * gen_hyperharmonic(2 * n - k, p, q)
         for k in range(2 * n + 1)),
        Fraction(0),
    )
    rhs = half * gen_hyperharmonic(n, p, q)
    plain_ok = sum(
        ((-1) ** k * harmonic_generalized(2 * n - k, p)
         for k in range(2 * n + 1)),
        Fraction(0),
    ) == half * harmonic_generalized(n, p)
    if q >= 1:
        hyper_ok = sum(
            ((-1) ** k * binomial(q + k - 1, k) * hyperharmonic(2 * n - k, q)
             for k in range(2 * n + 1)),
            Fraction(0),
        ) == Fraction(1, 2) * hyperharmonic(n, q)
        note = "general, plain-harmonic and hyperharmonic forms checked"
    else:
        hyper_ok = True
        note = "general and plain-harmonic forms checked (q=0: no hyperharmonic form)"
    return _identity(
        "prop-alt-sum", {"n": n, "p": p, "q": q}, lhs, rhs, note,
        extra_holds=plain_ok and hyper_ok,
    )


def _eval_prop_binom_shift(n: int, p: int, q: int) -> CheckResult:
    lhs = gen_hyperharmonic(n, p, q + 1)
    rhs = sum(
        ((-1) ** k * binomial(p - q, k) * gen_hyperharmonic(n - k, p, p + 1)
         for k in range(n + 1)),
        Fraction(0),
    )
    return _identity("prop-binom-shift", {"n": n, "p": p, "q": q}, lhs, rhs)


def _eval_thm_6a(n: int, l: int, r: int, q: int) -> CheckResult:
    lhs = sum(
        (stirling1_r(n, k, r) * perm(k, l) * _bernoulli_value(k - l, q)
         for k in range(l, n + 1)),
        Fraction(0),
    )
    rhs = (
        factorial(n)
        * binomial(n + q + r - 1, q + r - 2)
        * p_harmonic(l + 1, n + q + r - 1, q + r - 2)
    )
    return _identity("thm-6a", {"n": n, "l": l, "r": r, "q": q}, lhs, rhs)


def _eval_eq_7(n: int, l: int, q: int) -> CheckResult:
    lhs = hyperharmonic_order_derivative(n, l, q)
    rhs = binomial(q + n, q) * p_harmonic(l + 1, q + n, q)
    return _identity("eq-7", {"n": n, "l": l, "q": q}, lhs, rhs)


def _eval_lem_pb_s(n: int, p: int, q: int) -> CheckResult:
    lhs = _pbp_value(n, -p, q)
    rhs = sum(
        (Fraction(factorial(j)) ** 2 * stirling2(p + 1, j + 1)
         * stirling2_r(n, j, q + 1) for j in range(min(n, p) + 1)),
        Fraction(0),
    )
    return _identity("lem-pB-s", {"n": n, "p": p, "q": q}, lhs, rhs)


def _eval_duality_power_sum(n: int, p: int) -> CheckResult:
    lhs = sum(
        (stirling1_r(n, k, 1) * poly_bernoulli_number(p, -k)
         for k in range(n + 1)),
        Fraction(0),
    ) / factorial(n)
    rhs = hyper_sum(p, 0, n + 1)
    return _identity("duality-power-sum", {"n": n, "p": p}, lhs, rhs)


def _eval_thm_8(p: int, q: int, n: int) -> CheckResult:
    lhs = hyper_sum(p, q, n)
    rhs = Fraction(
        sum(
            factorial(j) * stirling2(p + 1, j + 1) * comb(n + q, j + q + 1)
            for j in range(p + 1)
        )
    )
    return _identity("thm-8", {"p": p, "q": q, "n": n}, lhs, rhs)


def _eval_thm_11(p: int, q: int, n: int) -> CheckResult:
    lhs = hyper_sum(p, q, n)
    rhs = Fraction(
        sum(
            (-1) ** (p + j) * stirling2(p, j) * comb(n + q + j, q + j + 1)
            * factorial(j)
            for j in range(1, p + 1)
        )
    )
    variant = Fraction(
        sum(
            (-1) ** (p + j) * stirling2(p + 1, j + 1)
            * comb(n + q + j + 1, q + j + 1) * factorial(j)
            for j in range(p + 1)
        )
    )
    return _identity(
        "thm-11", {"p": p, "q": q, "n": n}, lhs, rhs,
        note="shifted variant form checked as well",
        extra_holds=lhs == variant,
    )


def _eval_eq_12(n: int, p: int, q: int) -> CheckResult:
    lhs = _pbp_value(n, -p, q)
    rhs = poly_bernoulli_neg_closed(n, p, q)
    return _identity("eq-12", {"n": n, "p": p, "q": q}, lhs, rhs)


def _eval_eq_16(p: int, q: int, n: int) -> CheckResult:
    lhs = hyper_sum(p, q, n)
    rhs = sum(
        ((-1) ** k * stirling1_r(q, k, n + 1) * hyper_sum(p + k, 0, n)
         for k in range(q + 1)),
        Fraction(0),
    ) / factorial(q)
    return _identity("eq-16", {"p": p, "q": q, "n": n}, lhs, rhs)


def _eval_eq_17(q: int, n: int) -> CheckResult:
    lhs = hyper_sum(q, 0, n)
    rhs = Fraction(
        sum(
            (-1) ** k * stirling2_r(q, k, n + 1) * comb(k + n, k + 1)
            * factorial(k)
            for k in range(q + 1)
        )
    )
    return _identity("eq-17", {"q": q, "n": n}, lhs, rhs)


def _eval_eq_18(q: int, n: int) -> CheckResult:
    lhs = harmonic_generalized(n, 1 - q)  # sum of k^(q-1), q = 0 included
    rhs = sum(
        ((-1) ** k * stirling2_r(q, k, n + 1) * factorial(k)
         * gen_hyperharmonic(n, 1, k + 1) for k in range(q + 1)),
        Fraction(0),
    )
    return _identity("eq-18", {"q": q, "n": n}, lhs, rhs)


def _eval_prop_4_8(n: int, q: int) -> CheckResult:
    lhs = sum(
        (Fraction((-1) ** j, j) * comb(n, j) * comb(n + q - j, n)
         for j in range(1, q + 1)),
        Fraction(0),
    )
    rhs = binomial(n + q, q) * (harmonic(n + q) - harmonic(q) - harmonic(n))
    return _identity("prop-4.8", {"n": n, "q": q}, lhs, rhs)


def _eval_thm_5_2(n: int, p: int, q: int) -> CheckResult:
    lhs = Fraction(n) ** p * gen_hyperharmonic(n + 1, p, q)
    return _congruence("thm-5.2", {"n": n, "p": p, "q": q}, lhs, Fraction(q), n)


def _eval_thm_5_3(q: int, n: int) -> CheckResult:
    lhs = q * (hyperharmonic(n, q + 1) + n * hyperharmonic(q, n + 1))
    return _congruence("thm-5.3", {"q": q, "n": n}, lhs, Fraction(n), q)


def _eval_thm_5_4(p: int, q: int, n: int) -> CheckResult:
    lhs = hyper_sum(p, q, n)
    rhs = Fraction(comb(n + q + 1, q + 2))
    return _congruence("thm-5.4", {"p": p, "q": q, "n": n}, lhs, rhs, p)


def _eval_lem_5_5(p: int, n: int, q: int) -> CheckResult:
    lhs = _pbp_value(n, -p, q)
    rhs = Fraction((q + 2) ** n)
    return _congruence("lem-5.5", {"p": p, "n": n, "q": q}, lhs, rhs, p)


def _eval_prop_5_6(p: int, q: int) -> CheckResult:
    lhs = p * hyper_sum(p, q, p + 1)
    return _congruence("prop-5.6", {"p": p, "q": q}, lhs, Fraction(0), p)


def _eval_vsc(n: int) -> CheckResult:
    value = bernoulli_number(n) + sum(
        (Fraction(1, d + 1) for d in range(1, n + 1)
         if n % d == 0 and is_prime(d + 1)),
        Fraction(0),
    )
    integer_part = Fraction(value.numerator // value.denominator)
    return _identity(
        "vsc", {"n": n}, value, integer_part,
        note="holds iff the prime-corrected Bernoulli number is an integer",
    )


# --------------------------------------------------------------------------
# registry

_REGISTRY: dict[str, Check] = {}


def _register(check: Check) -> None:
    _REGISTRY[check.name] = check


_register(Check(
    name="eq-1.1",
    description="sum_k (-1)^k [n+1,k+1] B_k = n! H_{n+1}",
    param_names=("n",),
    defaults={"n": (0, 18)},
    evaluate=_eval_eq_1_1,
))

_register(Check(
    name="eq-HSB",
    description="sum_k [n+r,k+r]_r B_k = n! h_{n+1}^(r-1)",
    param_names=("n", "r"),
    defaults={"n": (0, 15), "r": (1, 5)},
    evaluate=_eval_eq_hsb,
    admissible=lambda n, r: r >= 1,
    domain_doc="requires r >= 1",
))

_register(Check(
    name="thm-gh-pB",
    description="sum_k [n+r,k+r]_r B_k^(p)(q) = n! H_{n+1}^(p,q+r)",
    param_names=("n", "r", "p", "q"),
    defaults={"n": (0, 18), "r": (0, 4), "p": (-4, 4), "q": (0, 4)},
    evaluate=_eval_thm_gh_pb,
))

_register(Check(
    name="cor-hpb",
    description="sum_k [n+1,k+1] B_k^(p) = n! H_{n+1}^(p)",
    param_names=("n", "p"),
    defaults={"n": (0, 15), "p": (1, 4)},
    evaluate=_eval_cor_hpb,
))

_register(Check(
    name="eq-pB-gh-inverse",
    description="B_n^(p)(q+1-r) = sum_k (-1)^(n-k) {n+r,k+r}_r k! H_{k+1}^(p,q+1)",
    param_names=("n", "r", "p", "q"),
    defaults={"n": (0, 12), "r": (0, 4), "p": (-4, 4), "q": (0, 4)},
    evaluate=_eval_pb_gh_inverse,
))

_register(Check(
    name="prop-alt-sum",
    description=("sum_{k<=2n} (-1)^k C(q+k-1,k) H_{2n-k}^(p,q) = 2^-p H_n^(p,q), "
                 "with its plain-harmonic and hyperharmonic special forms"),
    param_names=("n", "p", "q"),
    defaults={"n": (0, 12), "p": (-3, 3), "q": (0, 4)},
    evaluate=_eval_prop_alt_sum,
))

_register(Check(
    name="prop-binom-shift",
    description="H_n^(p,q+1) = sum_k (-1)^k C(p-q,k) H_{n-k}^(p,p+1)",
    param_names=("n", "p", "q"),
    defaults={"n": (0, 15), "p": (0, 5), "q": (0, 5)},
    evaluate=_eval_prop_binom_shift,
    admissible=lambda n, p, q: p >= 0,
    domain_doc="requires p >= 0 (depth p+1 must be a valid recursion depth)",
))

_register(Check(
    name="thm-6a",
    description=("sum_{k>=l} [n+r,k+r]_r k^(l-falling) B_{k-l}(q) = "
                 "n! C(n+q+r-1,q+r-2) P(l+1, n+q+r-1, q+r-2)"),
    param_names=("n", "l", "r", "q"),
    defaults={"n": (0, 12), "l": (0, 3), "r": (0, 3), "q": (0, 3)},
    evaluate=_eval_thm_6a,
    admissible=lambda n, l, r, q: q + r >= 2,
    domain_doc="requires q + r >= 2 (harmonic differences down to index q+r-2)",
))

_register(Check(
    name="eq-7",
    description="d^l/dx^l h_n^(x+1) at x=q equals C(q+n,q) P(l+1, q+n, q)",
    param_names=("n", "l", "q"),
    defaults={"n": (1, 10), "l": (0, 3), "q": (0, 4)},
    evaluate=_eval_eq_7,
    admissible=lambda n, l, q: n >= 1,
    domain_doc="requires n >= 1",
))

_register(Check(
    name="lem-pB-s",
    description="B_n^(-p)(q) = sum_j (j!)^2 {p+1,j+1} {n+q+1,j+q+1}_{q+1}",
    param_names=("n", "p", "q"),
    defaults={"n": (0, 10), "p": (0, 6), "q": (0, 8)},
    evaluate=_eval_lem_pb_s,
))

_register(Check(
    name="duality-power-sum",
    description="(1/n!) sum_k [n+1,k+1] B_p^(-k) = S_p(n+1)",
    param_names=("n", "p"),
    defaults={"n": (0, 12), "p": (0, 12)},
    evaluate=_eval_duality_power_sum,
))

_register(Check(
    name="thm-8",
    description="S_p^(q)(n) = sum_j j! {p+1,j+1} C(n+q, j+q+1)",
    param_names=("p", "q", "n"),
    defaults={"p": (0, 6), "q": (0, 8), "n": (0, 10)},
    evaluate=_eval_thm_8,
))

_register(Check(
    name="thm-11",
    description=("S_p^(q)(n) = sum_{j>=1} (-1)^(p+j) {p,j} C(n+q+j, q+j+1) j!, "
                 "plus the shifted variant over {p+1,j+1}"),
    param_names=("p", "q", "n"),
    defaults={"p": (1, 6), "q": (0, 8), "n": (0, 10)},
    evaluate=_eval_thm_11,
    admissible=lambda p, q, n: p >= 1,
    domain_doc="requires p >= 1 (both alternating sums are empty or shifted at p=0)",
))

_register(Check(
    name="eq-12",
    description="B_n^(-p)(q) = sum_{j>=1} {p,j} (-1)^(p+j) j! (j+q+1)^n",
    param_names=("n", "p", "q"),
    defaults={"n": (0, 10), "p": (1, 6), "q": (0, 8)},
    evaluate=_eval_eq_12,
    admissible=lambda n, p, q: p >= 1,
    domain_doc="requires p >= 1 (the closed form's sum is empty at p=0)",
))

_register(Check(
    name="eq-16",
    description="S_p^(q)(n) = (1/q!) sum_k (-1)^k [q+n+1,k+n+1]_{n+1} S_{p+k}(n)",
    param_names=("p", "q", "n"),
    defaults={"p": (0, 6), "q": (0, 8), "n": (0, 10)},
    evaluate=_eval_eq_16,
))

_register(Check(
    name="eq-17",
    description="S_q(n) = sum_k (-1)^k {q+n+1,k+n+1}_{n+1} C(k+n,k+1) k!",
    param_names=("q", "n"),
    defaults={"q": (0, 8), "n": (0, 10)},
    evaluate=_eval_eq_17,
))

_register(Check(
    name="eq-18",
    description="S_{q-1}(n) = sum_k (-1)^k {q+n+1,k+n+1}_{n+1} k! h_n^(k+1)",
    param_names=("q", "n"),
    defaults={"q": (0, 8), "n": (0, 10)},
    evaluate=_eval_eq_18,
))

_register(Check(
    name="prop-4.8",
    description=("sum_j ((-1)^j / j) C(n,j) C(n+q-j,n) = "
                 "C(n+q,q) (H_{n+q} - H_q - H_n)"),
    param_names=("n", "q"),
    defaults={"n": (0, 12), "q": (0, 8)},
    evaluate=_eval_prop_4_8,
))

_register(Check(
    name="thm-5.2",
    description="n^p H_{n+1}^(p,q) == q (mod n) for odd prime n",
    param_names=("n", "p", "q"),
    defaults={"n": (3, 31), "p": (1, 4), "q": (1, 6)},
    evaluate=_eval_thm_5_2,
    modulus_param="n",
    prime_params=("n",),
    admissible=lambda n, p, q: n % 2 == 1 and p >= 1 and q >= 1,
    domain_doc="requires odd prime n and p, q >= 1",
))

_register(Check(
    name="thm-5.3",
    description="q (h_n^(q+1) + n h_q^(n+1)) == n (mod q) for prime q, 1<=n<q",
    param_names=("q", "n"),
    defaults={"q": (2, 31), "n": (1, 30)},
    evaluate=_eval_thm_5_3,
    modulus_param="q",
    prime_params=("q",),
    admissible=lambda q, n: 1 <= n <= q - 1,
    domain_doc="requires 1 <= n <= q-1",
))

_register(Check(
    name="thm-5.4",
    description="S_p^(q)(n) == C(n+q+1, q+2) (mod p) for prime p",
    param_names=("p", "q", "n"),
    defaults={"p": (2, 31), "q": (0, 5), "n": (0, 20)},
    evaluate=_eval_thm_5_4,
    modulus_param="p",
    prime_params=("p",),
))

_register(Check(
    name="lem-5.5",
    description="B_n^(-p)(q) == (q+2)^n (mod p) for prime p",
    param_names=("p", "n", "q"),
    defaults={"p": (2, 23), "n": (1, 15), "q": (0, 5)},
    evaluate=_eval_lem_5_5,
    modulus_param="p",
    prime_params=("p",),
    admissible=lambda p, n, q: n >= 1,
    domain_doc="requires n >= 1",
))

_register(Check(
    name="prop-5.6",
    description="p S_p^(q)(p+1) == 0 (mod p) for prime p",
    param_names=("p", "q"),
    defaults={"p": (2, 13), "q": (0, 5)},
    evaluate=_eval_prop_5_6,
    modulus_param="p",
    prime_params=("p",),
))

_register(Check(
    name="vsc",
    description="B_n + sum over primes with (p-1)|n of 1/p is an integer",
    param_names=("n",),
    defaults={"n": (1, 30)},
    evaluate=_eval_vsc,
    admissible=lambda n: n == 1 or (n >= 2 and n % 2 == 0),
    domain_doc="requires n = 1 or even n >= 2",
))


# --------------------------------------------------------------------------
# execution


def check_names() -> list[str]:
    """Registered check names, in registry order."""
    return list(_REGISTRY)


def get_check(name: str) -> Check:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}") from None


def run_check(name: str, params: Mapping[str, int]) -> CheckResult:
    """Evaluate a single registered check instance.

    Raises ValueError for unknown checks, incomplete or unexpected
    parameters, non-prime values for prime-constrained parameters, and
    assignments outside the check's domain.
    """
    check = get_check(name)
    given = set(params)
    expected = set(check.param_names)
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unexpected {extra}")
        raise ValueError(f"bad parameters for {name}: {', '.join(detail)}")
    for pname in check.prime_params:
        if not is_prime(params[pname]):
            raise ValueError(
                f"{name} requires {pname} to be prime, got {params[pname]}"
            )
    kwargs = {pname: params[pname] for pname in check.param_names}
    if check.admissible is not None and not check.admissible(**kwargs):
        raise ValueError(f"{name} parameters out of domain: {check.domain_doc}")
    return check.evaluate(**kwargs)


def _instances(check: Check,
               ranges: Mapping[str, tuple[int, int]]) -> Iterable[dict[str, int]]:
    axes = []
    for pname in check.param_names:
        lo, hi = ranges[pname]
        values = [
            v for v in range(lo, hi + 1)
            if pname not in check.prime_params or is_prime(v)
        ]
        axes.append(values)
    for combo in product(*axes):
        assignment = dict(zip(check.param_names, combo))
        if check.admissible is None or check.admissible(**assignment):
            yield assignment


def run_sweep(
    name: str, ranges: Mapping[str, tuple[int, int]] | None = None
) -> SweepReport:
    """Run a check over the Cartesian product of inclusive ranges.

    ``ranges`` overrides the check's default ranges per parameter; prime
    and domain constraints filter the grid (filtered points do not count
    toward the total).
    """
    check = get_check(name)
    merged = dict(check.defaults)
    if ranges:
        unknown = sorted(set(ranges) - set(check.param_names))
        if unknown:
            raise ValueError(f"unknown parameters for {name}: {unknown}")
        merged.update(ranges)
    start = time.perf_counter()
    total = 0
    failures: list[CheckResult] = []
    for assignment in _instances(check, merged):
        total += 1
        result = check.evaluate(**assignment)
        if not result.holds:
            failures.append(result)
    elapsed = time.perf_counter() - start
    return SweepReport(name, total, tuple(failures), elapsed)


def run_all(
    overrides: Mapping[str, Mapping[str, tuple[int, int]]] | None = None
) -> list[SweepReport]:
    """Run every registered check on its default (or overridden) ranges."""
    overrides = overrides or {}
    return [run_sweep(name, overrides.get(name)) for name in _REGISTRY]
