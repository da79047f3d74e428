"""Verification paths that share no code with the series evaluators."""

from .powerseries import TruncSeries, series_exp, series_pow_binomial, trinomial_series
from .quadrature import quad_finite, quad_full_line, quad_half_line

__all__ = [
    "TruncSeries",
    "quad_finite",
    "quad_full_line",
    "quad_half_line",
    "series_exp",
    "series_pow_binomial",
    "trinomial_series",
]
