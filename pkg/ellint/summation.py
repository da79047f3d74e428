"""
Compensated summation and the truncation policy shared by every series in the package.

A series stops once ``stall_window`` consecutive terms are at most ``tol * max(1, |S|)``,
or at the hard term cap. Cancellation is flagged when the final sum is small compared with
the largest term that entered it.
"""
from __future__ import annotations

import logging
import math
from typing import Iterable, Tuple

import numpy as np

from .models import SeriesValue

logger = logging.getLogger(__name__)


def two_sum(u: float, v: float) -> Tuple[float, float]:
    """Error-free transformation: u + v == s + t exactly."""
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    t = -(up + vpp)
    return s, t


class CompensatedSum:
    """Running sum carried as a leading float plus its rounding error."""

    __slots__ = ("_s", "_t")

    def __init__(self, value: float = 0.0):
        self._s = float(value)
        self._t = 0.0

    def add(self, y: float) -> None:
        y = float(y)
        if not (math.isfinite(y) and math.isfinite(self._s)):
            # Error terms are meaningless once the sum leaves the finite range.
            self._s += y
            self._t = 0.0
            return
        y, u = two_sum(y, self._t)
        self._s, self._t = two_sum(y, self._s)
        if not math.isfinite(self._s):
            self._t = 0.0
            return
        if self._s == 0.0:
            self._s = u
        else:
            self._t += u

    @property
    def value(self) -> float:
        return self._s + self._t

    def __float__(self) -> float:
        return self.value


def scaled_exp_sum(terms: Iterable[Tuple[float, float]]) -> float:
    """Sum of ``sign * exp(log_mag)`` over ``(log_mag, sign)`` pairs.

    Terms are summed relative to the largest one, so no term overflows or underflows on its
    own; the result is +-inf only when the sum itself leaves the double range.
    """
    pairs = [(log_mag, sign) for log_mag, sign in terms if sign != 0.0]
    if not pairs:
        return 0.0
    shift = max(log_mag for log_mag, _ in pairs)
    acc = CompensatedSum()
    for log_mag, sign in pairs:
        acc.add(sign * math.exp(log_mag - shift))
    if acc.value == 0.0:
        return 0.0
    with np.errstate(over="ignore", under="ignore"):
        half = np.exp(np.float64(shift) / 2.0)
        return float(np.float64(acc.value) * half * half)


class SeriesAccumulator:
    """Feeds terms into a compensated sum and decides when the series has converged."""

    def __init__(
        self,
        *,
        tol: float,
        max_terms: int,
        stall_window: int = 2,
        cancellation_ratio: float = 1e-6,
    ):
        self.tol = tol
        self.max_terms = max_terms
        self.stall_window = max(1, stall_window)
        self.cancellation_ratio = cancellation_ratio
        self._sum = CompensatedSum()
        self._small_run = 0
        self._last = 0.0
        self.terms_used = 0
        self.max_term = 0.0
        self.failed = False

    @property
    def value(self) -> float:
        return self._sum.value

    @property
    def converged(self) -> bool:
        return not self.failed and self._small_run >= self.stall_window

    @property
    def done(self) -> bool:
        return self.failed or self.converged or self.terms_used >= self.max_terms

    def push(self, term: float) -> bool:
        """Add one term; return True once no further terms are wanted."""
        if not math.isfinite(term):
            self.failed = True
            return True
        self._sum.add(term)
        self.terms_used += 1
        magnitude = abs(term)
        self.max_term = max(self.max_term, magnitude)
        self._last = magnitude
        if magnitude <= self.tol * max(1.0, abs(self._sum.value)):
            self._small_run += 1
        else:
            self._small_run = 0
        return self.done

    def mark_exhausted(self) -> None:
        """The term source ended: the sum is complete, nothing was truncated."""
        self._small_run = self.stall_window
        self._last = 0.0

    def result(self) -> SeriesValue:
        value = self.value
        cancelled = self.max_term > 0.0 and abs(value) < self.cancellation_ratio * self.max_term
        converged = self.converged
        if not converged:
            logger.warning(
                "Series stopped after %s terms without converging (last term %.3e)",
                self.terms_used,
                self._last,
            )
        else:
            logger.debug("Series converged after %s terms (last term %.3e)", self.terms_used, self._last)
        return SeriesValue(
            value=value if math.isfinite(value) else math.nan,
            terms_used=self.terms_used,
            trunc_estimate=self._last if math.isfinite(self._last) else math.inf,
            cancellation_flag=cancelled,
            converged=converged,
            max_term=self.max_term,
        )


def sum_series(
    terms: Iterable[float],
    *,
    tol: float,
    max_terms: int,
    stall_window: int = 2,
    cancellation_ratio: float = 1e-6,
) -> SeriesValue:
    """Sum ``terms`` lazily under the shared truncation policy."""
    acc = SeriesAccumulator(
        tol=tol,
        max_terms=max_terms,
        stall_window=stall_window,
        cancellation_ratio=cancellation_ratio,
    )
    iterator = iter(terms)
    while not acc.done:
        try:
            term = next(iterator)
        except StopIteration:
            acc.mark_exhausted()
            break
        except OverflowError:
            acc.failed = True
            break
        acc.push(term)
    return acc.result()


def partial_sum(
    terms: Iterable[float],
    *,
    trunc_estimate: float,
    tol: float,
    cancellation_ratio: float = 1e-6,
) -> SeriesValue:
    """Fixed-length partial sum whose truncation estimate is supplied by the caller."""
    acc = CompensatedSum()
    count = 0
    max_term = 0.0
    for term in terms:
        acc.add(term)
        count += 1
        max_term = max(max_term, abs(term))
    value = acc.value
    estimate = abs(trunc_estimate)
    return SeriesValue(
        value=value,
        terms_used=count,
        trunc_estimate=estimate if math.isfinite(estimate) else math.inf,
        cancellation_flag=max_term > 0.0 and abs(value) < cancellation_ratio * max_term,
        converged=math.isfinite(value) and estimate <= tol * max(1.0, abs(value)),
        max_term=max_term,
    )
