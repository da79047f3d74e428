"""
Truncated power series with numpy coefficient arithmetic.

A ``TruncSeries`` of order N stands for c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)). Binary
operations keep the smaller order, so coefficients beyond it are never trusted.
"""
from __future__ import annotations

from typing import Mapping, Optional, Union

import numpy as np

from ..config import NumericsSettings, get_settings
from ..exceptions import DomainError

Scalar = Union[int, float]


class TruncSeries:
    """Coefficients c_0 .. c_N of a power series truncated at order N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: Optional[int] = None):
        c = np.asarray(coeffs, dtype=float).ravel()
        if c.size == 0:
            raise ValueError("empty coefficient array")
        if order is None:
            order = c.size - 1
        if order < 0:
            raise ValueError(f"order cannot be less than zero: order = {order}")
        out = np.zeros(order + 1)
        keep = min(order + 1, c.size)
        out[:keep] = c[:keep]
        self.coeffs = out

    @classmethod
    def monomial_sum(cls, terms: Mapping[int, float], order: int) -> "TruncSeries":
        """Series of sum(coeff * x**power) with powers above ``order`` dropped."""
        c = np.zeros(order + 1)
        for power, coeff in terms.items():
            if power < 0:
                raise ValueError(f"negative power {power}")
            if power <= order:
                c[power] += coeff
        return cls(c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def coefficient(self, n: int) -> float:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside order {self.order}")
        return float(self.coeffs[n])

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({self.coeffs.tolist()!r})"

    def __add__(self, other: Union["TruncSeries", Scalar]) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            order = min(self.order, other.order)
            return TruncSeries(self.coeffs[: order + 1] + other.coeffs[: order + 1])
        c = self.coeffs.copy()
        c[0] += other
        return TruncSeries(c)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(-self.coeffs)

    def __sub__(self, other: Union["TruncSeries", Scalar]) -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: Union["TruncSeries", Scalar]) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            order = min(self.order, other.order)
            return TruncSeries(np.convolve(self.coeffs, other.coeffs)[: order + 1])
        return TruncSeries(other * self.coeffs)

    __rmul__ = __mul__

    def deriv(self) -> "TruncSeries":
        """d/dx; the result has order N - 1 (order 0 stays a zero constant)."""
        if self.order == 0:
            return TruncSeries([0.0])
        return TruncSeries(self.coeffs[1:] * np.arange(1, self.order + 1))

    def integ(self) -> "TruncSeries":
        """Antiderivative vanishing at 0; the result has order N + 1."""
        c = np.zeros(self.order + 2)
        c[1:] = self.coeffs / np.arange(1, self.order + 2)
        return TruncSeries(c)


def _require_zero_constant(u: TruncSeries) -> None:
    if u.coeffs[0] != 0.0:
        raise DomainError(
            f"Composition needs a zero constant term, got {u.coeffs[0]}",
            field="u",
            value=float(u.coeffs[0]),
        )


def series_pow_binomial(u: TruncSeries, nu: float) -> TruncSeries:
    """(1 + u)^(-nu) = sum_k binom(-nu, k) u^k, truncated at the order of ``u``."""
    _require_zero_constant(u)
    result = TruncSeries([1.0], order=u.order)
    power = TruncSeries([1.0], order=u.order)
    binom = 1.0
    # u^k starts at x^k, so k never needs to exceed the order.
    for k in range(1, u.order + 1):
        binom *= (-nu - (k - 1)) / k
        power = power * u
        result = result + binom * power
    return result


def series_exp(u: TruncSeries) -> TruncSeries:
    """exp(u) = sum_k u^k / k! for u with zero constant term."""
    _require_zero_constant(u)
    result = TruncSeries([1.0], order=u.order)
    power = TruncSeries([1.0], order=u.order)
    for k in range(1, u.order + 1):
        power = power * u * (1.0 / k)
        result = result + power
    return result


def trinomial_series(
    a: float,
    b: float,
    m: int,
    order: Optional[int] = None,
    settings: Optional[NumericsSettings] = None,
) -> TruncSeries:
    """u = b x + a x^m at the configured truncation order."""
    cfg = settings or get_settings()
    order = order if order is not None else cfg.truncation_order
    return TruncSeries.monomial_sum({1: b}, order) + TruncSeries.monomial_sum({m: a}, order)
