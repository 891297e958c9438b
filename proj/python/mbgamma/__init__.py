"""Multiple Bernoulli polynomials, multiple Hurwitz zeta and BM multiple gamma functions."""

from fractions import Fraction

from ._core import (
    AccuracyError,
    ContinuationConfig,
    ContourConfig,
    P0_closed,
    PoleError,
    TruncationError,
    __version__,
    classical_stirling,
    decay_slope,
    f_omega,
    hankel_P,
    log_gamma_r,
    log_gamma_rk,
    log_gamma_rk_contour,
    multiple_bernoulli_closed,
    multiple_bernoulli_series,
    reciprocal_gamma,
    residual_report,
    stirling_expand,
    verify,
    zeta,
    zeta_continued,
    zeta_derivative,
    zeta_direct,
    zeta_limit,
    zeta_special_value,
)
from ._core import classical_bernoulli as _classical_bernoulli


def classical_bernoulli(n):
    """Coefficients of B_n(w) as Fractions, constant term first."""
    return [Fraction(c) for c in _classical_bernoulli(n)]
