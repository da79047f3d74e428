"""Conversion of raw series and quadrature results into EvalReport records."""
from __future__ import annotations

import logging
from typing import List, Optional

import numpy as np

from .exceptions import QuadratureError
from .models import EvalReport, Method, QuadResult, SeriesValue

logger = logging.getLogger(__name__)

EPS = float(np.finfo(float).eps)


def series_error(sv: SeriesValue) -> float:
    """Truncation estimate plus the cancellation penalty max|term| * eps."""
    return sv.trunc_estimate + sv.max_term * EPS


def series_acceptable(sv: SeriesValue, tol: float) -> bool:
    """Converged, free of cancellation, and within tol on the scale the truncation rule uses."""
    return sv.converged and not sv.cancellation_flag and series_error(sv) <= tol * max(1.0, abs(sv.value))


def report_from_series(
    sv: SeriesValue,
    method: Method = Method.SERIES,
    warnings: Optional[List[str]] = None,
) -> EvalReport:
    notes = list(warnings or [])
    if sv.cancellation_flag:
        notes.append(f"cancellation: max term {sv.max_term:.3e} against sum {sv.value:.3e}")
    if not sv.converged:
        notes.append(f"series not converged after {sv.terms_used} terms")
    return EvalReport(
        value=sv.value,
        abs_err_est=series_error(sv),
        method=method,
        terms_used=sv.terms_used,
        converged=sv.converged,
        warnings=notes,
    )


def report_from_quadrature(
    result: QuadResult,
    what: str,
    warnings: Optional[List[str]] = None,
) -> EvalReport:
    """Wrap a quadrature result, raising when the engine fell short of the tolerance."""
    if not result.converged:
        logger.warning("Quadrature for %s stopped at error %.3e", what, result.abs_err_est)
        raise QuadratureError(
            f"Quadrature for {what} did not reach the requested tolerance "
            f"(estimate {result.value!r}, error {result.abs_err_est:.3e})",
            estimate=result.value,
            abs_err_est=result.abs_err_est,
        )
    return EvalReport(
        value=result.value,
        abs_err_est=result.abs_err_est,
        method=Method.QUADRATURE,
        terms_used=result.evaluations,
        converged=True,
        warnings=list(warnings or []),
    )
