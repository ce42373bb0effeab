from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperharm.bernoulli import poly_bernoulli_number, poly_bernoulli_polynomial
from hyperharm.harmonic import (
    gen_hyperharmonic,
    harmonic_generalized,
    hyper_sum,
    hyperharmonic,
    p_harmonic,
)
from hyperharm.polynomials import RationalPolynomial
from hyperharm.rationals import binomial
from hyperharm.series import (
    GeneratingFunction,
    TruncatedSeries,
    gf_extract,
    polylog_series,
)
from hyperharm.stirling import stirling2, stirling2_r

ORDER = 12


# --- arithmetic plumbing ---------------------------------------------------------


def test_construction_and_truncation():
    s = TruncatedSeries([1, 2], order=4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    assert s.order == 4
    assert TruncatedSeries([1, 2, 3], order=1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries([], order=None)
    with pytest.raises(ValueError):
        TruncatedSeries([1], order=-1)


def test_mixed_order_arithmetic_truncates_to_minimum():
    a = TruncatedSeries([1, 1, 1, 1, 1])
    b = TruncatedSeries([1, 2, 3])
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert (a * b).coeffs == (1, 3, 6)


def test_geometric_square():
    inv = TruncatedSeries.one_minus_t_power(-1, 3)
    assert (inv * inv).coeffs == (1, 2, 3, 4)


def test_one_minus_t_power_consistency():
    for e in range(-5, 6):
        series = TruncatedSeries.one_minus_t_power(e, 10)
        for n in range(11):
            assert series[n] == (-1) ** n * binomial(e, n)
    # positive powers terminate
    assert TruncatedSeries.one_minus_t_power(2, 5).coeffs == (1, -2, 1, 0, 0, 0)


@given(st.lists(st.fractions(min_value=-30, max_value=30, max_denominator=12),
                min_size=0, max_size=6))
def test_exp_log_round_trip(tail):
    series = TruncatedSeries([0] + tail, order=8)
    assert series.exp().log() == series


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1]).exp()
    with pytest.raises(ValueError):
        TruncatedSeries([0, 1]).log()
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1]).compose(TruncatedSeries([1, 0]))


def test_exp_linear_matches_exp_of_ct():
    for c in (-2, 0, 3):
        direct = TruncatedSeries.exp_linear(c, 8)
        composed = TruncatedSeries([0, c], order=8).exp()
        assert direct == composed


def test_compose_identity_and_scaling():
    f = TruncatedSeries([5, 1, Fraction(2, 3), 0, 7])
    t = TruncatedSeries.identity(4)
    assert f.compose(t) == f
    g = f.compose(TruncatedSeries([0, -1], order=4))
    assert g.coeffs == tuple((-1) ** n * c for n, c in enumerate(f.coeffs))


def test_compose_against_polynomial_substitution():
    # compare series composition with exact polynomial composition
    outer = RationalPolynomial([1, -2, Fraction(1, 2), 4])
    inner = RationalPolynomial([0, 3, -1])
    expected = RationalPolynomial.zero()
    for c in reversed(outer.coeffs):
        expected = expected * inner + c
    got = TruncatedSeries.from_polynomial(outer, 9).compose(
        TruncatedSeries.from_polynomial(inner, 9)
    )
    assert got.coeffs == tuple(expected.coefficient(i) for i in range(10))


# --- polylogarithms ----------------------------------------------------------------


def test_polylog_values():
    assert polylog_series(1, 4).coeffs == (0, 1, Fraction(1, 2), Fraction(1, 3),
                                           Fraction(1, 4))
    assert polylog_series(-1, 4).coeffs == (0, 1, 2, 3, 4)
    assert polylog_series(0, 3).coeffs == (0, 1, 1, 1)
    assert polylog_series(2, 3).coeffs == (0, 1, Fraction(1, 4), Fraction(1, 9))


def test_polylog_zero_order_is_geometric():
    t_over = TruncatedSeries.one_minus_t_power(-1, 9) * TruncatedSeries.identity(9)
    assert polylog_series(0, 9) == t_over


def test_polylog_duplication():
    # Li_p(-t) + Li_p(t) = 2^(1-p) Li_p(t^2)
    minus_t = TruncatedSeries([0, -1], order=ORDER)
    t_squared = TruncatedSeries([0, 0, 1], order=ORDER)
    for p in range(-4, 5):
        li = polylog_series(p, ORDER)
        lhs = li.compose(minus_t) + li
        rhs = Fraction(2) ** (1 - p) * li.compose(t_squared)
        assert lhs == rhs, p


def test_polylog_negative_order_closed_form():
    # Li_{-p}(t) = (-1)^(p+1) sum_k k! {p+1,k+1} (-1/(1-t))^(k+1) for p >= 1
    for p in range(1, 7):
        closed = TruncatedSeries.zero(ORDER)
        for k in range(p + 1):
            closed = closed + (
                factorial(k)
                * stirling2(p + 1, k + 1)
                * (-1) ** (k + 1)
                * TruncatedSeries.one_minus_t_power(-(k + 1), ORDER)
            )
        closed = (-1) ** (p + 1) * closed
        assert closed == polylog_series(-p, ORDER), p


def test_polylog_closed_form_breaks_only_at_constant_term_for_p_zero():
    # the p = 0 instance of the closed form collapses to 1/(1-t), which
    # differs from Li_0 = t/(1-t) by exactly the constant term 1
    closed = TruncatedSeries.one_minus_t_power(-1, ORDER)
    li0 = polylog_series(0, ORDER)
    assert closed.coeffs[0] == 1 and li0.coeffs[0] == 0
    assert closed.coeffs[1:] == li0.coeffs[1:]


# --- generating-function oracle vs direct evaluation --------------------------------


def test_gf_poly_bernoulli():
    for p in range(-3, 4):
        for x in range(4):
            coeffs = gf_extract(GeneratingFunction.POLY_BERNOULLI, ORDER, p=p, x=x)
            for n in range(ORDER + 1):
                assert coeffs[n] * factorial(n) == poly_bernoulli_polynomial(n, p)(x)


def test_gf_poly_bernoulli_compose_example():
    # Li_2(1 - e^{-t}) equals (1 - e^{-t}) times the order-2 number gf
    u = 1 - TruncatedSeries.exp_linear(-1, 6)
    li2_of_u = polylog_series(2, 6).compose(u)
    numbers = TruncatedSeries(
        [poly_bernoulli_number(n, 2) / factorial(n) for n in range(7)]
    )
    assert li2_of_u == u * numbers


def test_gf_gen_hyperharmonic():
    for p in range(-3, 4):
        for q in range(5):
            coeffs = gf_extract(
                GeneratingFunction.GEN_HYPERHARMONIC, ORDER, p=p, q=q
            )
            for n in range(ORDER + 1):
                assert coeffs[n] == gen_hyperharmonic(n, p, q)


def test_gf_hyperharmonic():
    assert gf_extract(GeneratingFunction.HYPERHARMONIC, 3, q=2) == [
        0, 1, Fraction(5, 2), Fraction(13, 3),
    ]
    for q in range(1, 5):
        coeffs = gf_extract(GeneratingFunction.HYPERHARMONIC, ORDER, q=q)
        for n in range(ORDER + 1):
            assert coeffs[n] == hyperharmonic(n, q)


def test_gf_r_stirling2():
    for k in range(5):
        for r in range(4):
            coeffs = gf_extract(GeneratingFunction.R_STIRLING2, ORDER, k=k, r=r)
            for n in range(ORDER + 1):
                assert coeffs[n] * factorial(n) == stirling2_r(n, k, r)


def test_gf_p_harmonic():
    for r in range(4):
        for m in range(5):
            coeffs = gf_extract(GeneratingFunction.P_HARMONIC, ORDER, r=r, m=m)
            for k in range(ORDER + 1):
                assert coeffs[k] == binomial(m + k, m) * p_harmonic(r, m + k, m)


def test_gf_geometric_encodes_power_sums():
    for n in range(1, 9):
        coeffs = gf_extract(GeneratingFunction.GEOMETRIC, ORDER, n=n)
        assert coeffs[0] == 0
        for k in range(1, ORDER + 1):
            assert coeffs[k] == k**n


def test_gf_hyper_sum_index():
    assert gf_extract(GeneratingFunction.HYPER_SUM_INDEX, 2, p=2, n=3) == [14, 20, 27]
    for p in range(4):
        for n in range(6):
            coeffs = gf_extract(GeneratingFunction.HYPER_SUM_INDEX, ORDER, p=p, n=n)
            for k in range(ORDER + 1):
                assert coeffs[k] == hyper_sum(p, k, n)


def test_gf_hyperharmonic_index():
    for n in range(6):
        coeffs = gf_extract(GeneratingFunction.HYPERHARMONIC_INDEX, ORDER, n=n)
        for k in range(ORDER + 1):
            expected = hyperharmonic(n, k + 1) if n else Fraction(0)
            assert coeffs[k] == expected


def test_gf_harmonic_special_case():
    # shift-0 hyperharmonic gf reduces to -log(1-t), the p=1 polylog
    coeffs = gf_extract(GeneratingFunction.HYPERHARMONIC, ORDER, q=0)
    for n in range(1, ORDER + 1):
        assert coeffs[n] == Fraction(1, n)


def test_gf_unknown_name():
    with pytest.raises(ValueError):
        gf_extract("not-a-gf", 4, p=1)
    with pytest.raises(ValueError):
        gf_extract(GeneratingFunction.HYPERHARMONIC, -1, q=1)
