"""Exact-arithmetic toolkit for the harmonic / hyperharmonic / Stirling /
Bernoulli / poly-Bernoulli family of sequences, with a registry of
mechanically verified identities and congruences."""

from .bernoulli import (
    bernoulli_number,
    bernoulli_polynomial,
    poly_bernoulli_neg_closed,
    poly_bernoulli_number,
    poly_bernoulli_polynomial,
)
from .harmonic import (
    HyperSumStrategy,
    gen_hyperharmonic,
    harmonic,
    harmonic_generalized,
    hyper_sum,
    hyperharmonic,
    hyperharmonic_order_derivative,
    hyperharmonic_order_poly,
    p_harmonic,
)
from .polynomials import (
    RationalPolynomial,
    bell_complete,
    geometric_poly,
    p_poly,
)
from .rationals import (
    Rational,
    as_rational,
    binomial,
    falling_factorial,
    is_m_integer,
    rational_congruent,
    rising_factorial,
)
from .series import (
    GeneratingFunction,
    TruncatedSeries,
    gf_extract,
    polylog_series,
)
from .stirling import (
    StirlingKind,
    StirlingTable,
    r_stirling_transform,
    stirling1,
    stirling1_r,
    stirling2,
    stirling2_r,
)
from .verify import CheckResult, SweepReport, check_names, run_all, run_check, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "GeneratingFunction",
    "HyperSumStrategy",
    "Rational",
    "RationalPolynomial",
    "StirlingKind",
    "StirlingTable",
    "SweepReport",
    "TruncatedSeries",
    "as_rational",
    "bell_complete",
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "check_names",
    "falling_factorial",
    "gen_hyperharmonic",
    "geometric_poly",
    "gf_extract",
    "harmonic",
    "harmonic_generalized",
    "hyper_sum",
    "hyperharmonic",
    "hyperharmonic_order_derivative",
    "hyperharmonic_order_poly",
    "is_m_integer",
    "p_harmonic",
    "p_poly",
    "poly_bernoulli_neg_closed",
    "poly_bernoulli_number",
    "poly_bernoulli_polynomial",
    "polylog_series",
    "r_stirling_transform",
    "rational_congruent",
    "rising_factorial",
    "run_all",
    "run_check",
    "run_sweep",
    "stirling1",
    "stirling1_r",
    "stirling2",
    "stirling2_r",
]
