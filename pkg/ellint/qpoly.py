"""
Q_n(a, b | nu, m): Taylor coefficients (times n!) of G(x) = (1 + b x + a x^m)^(-nu),
the series of G itself and the incomplete integral of G over [0, x].
"""
from __future__ import annotations

import logging
import math
from typing import Iterator, Optional, Tuple

import numpy as np
from scipy import special

from .config import NumericsSettings, get_settings, resolve
from .exceptions import DegreeRangeError, DomainError
from .models import QPolyCoeffs, QPolyParams, SeriesValue
from .polynomials import min_on_interval, trinomial_coeffs
from .summation import scaled_exp_sum, sum_series

logger = logging.getLogger(__name__)


def _check_degree(n: int, cfg: NumericsSettings) -> None:
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}", field="n", value=n)
    if n > cfg.hermite_max_degree:
        raise DegreeRangeError(n, cfg.hermite_max_degree)


def _log_summands(n: int, p: QPolyParams) -> Iterator[Tuple[int, float, float]]:
    """Yield (r, log|term|, sign) for the summands of Q_n without n!.

    term_r = (-1)^k n! / (j! r!) (nu)_k b^j a^r with j = n - m r and k = j + r. Exact zeros
    (a zero base raised to a positive power) are skipped.
    """
    log_b = math.log(abs(p.b)) if p.b else 0.0
    log_a = math.log(abs(p.a)) if p.a else 0.0
    log_gamma_nu = special.gammaln(p.nu)
    for r in range(n // p.m + 1):
        j = n - p.m * r
        if (p.b == 0.0 and j > 0) or (p.a == 0.0 and r > 0):
            continue
        k = j + r
        log_mag = (
            special.gammaln(p.nu + k)
            - log_gamma_nu
            - special.gammaln(j + 1)
            - special.gammaln(r + 1)
            + j * log_b
            + r * log_a
        )
        sign = -1.0 if k % 2 else 1.0
        if p.b < 0.0 and j % 2:
            sign = -sign
        if p.a < 0.0 and r % 2:
            sign = -sign
        yield r, float(log_mag), sign


def q_poly_coeffs(
    n: int,
    p: QPolyParams,
    settings: Optional[NumericsSettings] = None,
) -> QPolyCoeffs:
    """Signed summands of Q_n, one per r = 0 .. n // m.

    A summand too large for a double is reported as +-inf.
    """
    cfg = settings or get_settings()
    _check_degree(n, cfg)
    log_nfact = special.gammaln(n + 1)
    coeffs = []
    present = {r: (log_mag, sign) for r, log_mag, sign in _log_summands(n, p)}
    with np.errstate(over="ignore", under="ignore"):
        for r in range(n // p.m + 1):
            if r not in present:
                coeffs.append((r, 0.0))
                continue
            log_mag, sign = present[r]
            coeffs.append((r, sign * float(np.exp(log_mag + log_nfact))))
    return QPolyCoeffs(n=n, coeffs=coeffs)


def q_poly(n: int, p: QPolyParams, settings: Optional[NumericsSettings] = None) -> float:
    """Q_n(a, b | nu, m), summed in log space so single summands may exceed the double range.

    Raises DegreeRangeError only when Q_n itself does not fit in a double.
    """
    cfg = settings or get_settings()
    _check_degree(n, cfg)
    log_nfact = float(special.gammaln(n + 1))
    value = scaled_exp_sum((log_mag + log_nfact, sign) for _, log_mag, sign in _log_summands(n, p))
    if not math.isfinite(value):
        raise DegreeRangeError(
            n,
            cfg.hermite_max_degree,
            message=f"Q_{n} overflows double precision for a={p.a}, b={p.b}, nu={p.nu}, m={p.m}",
        )
    return value


def _taylor_terms(p: QPolyParams, x: float) -> Iterator[float]:
    """Yield x^n Q_n / n! for n = 0, 1, ...

    Uses x^n Q_n / n! = sum_r (-1)^k w_k C(k, r) (b x)^(n - m r) (a x^m)^r with
    k = n - (m - 1) r and w_k = (nu)_k / k!, so no factorial is ever formed.
    """
    bx = p.b * x
    axm = p.a * x**p.m
    weights = [1.0]
    n = 0
    while True:
        while len(weights) <= n:
            k = len(weights) - 1
            weights.append(weights[-1] * (p.nu + k) / (k + 1))
        total = 0.0
        for r in range(n // p.m + 1):
            j = n - p.m * r
            k = j + r
            term = weights[k] * math.comb(k, r) * bx**j * axm**r
            total += -term if k % 2 else term
        yield total
        n += 1


def _check_series_domain(p: QPolyParams, x: float) -> None:
    if not abs(x) < 1.0:
        raise DomainError(f"Series requires |x| < 1, got x={x}", field="x", value=x)
    if abs(p.b) > abs(p.a):
        raise DomainError(f"Series requires |b| <= |a|, got b={p.b}, a={p.a}", field="b", value=p.b)


def g_series(
    p: QPolyParams,
    x: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """G(a, b; x | nu, m) = sum_n x^n / n! Q_n(a, b | nu, m)."""
    cfg, tol = resolve(settings, tol)
    _check_series_domain(p, x)
    return sum_series(
        _taylor_terms(p, x),
        tol=tol,
        max_terms=cfg.max_terms,
        # With b = 0 the coefficients vanish in runs of m - 1.
        stall_window=max(2, p.m),
        cancellation_ratio=cfg.cancellation_ratio,
    )


def incomplete_integral(
    p: QPolyParams,
    x: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """Integral of G over [0, x] as sum_n x^(n+1) / (n+1)! Q_n."""
    cfg, tol = resolve(settings, tol)
    _check_series_domain(p, x)
    lowest = min_on_interval(trinomial_coeffs(p.a, p.b, p.m), min(0.0, x), max(0.0, x))
    if lowest <= 0.0:
        raise DomainError(
            f"1 + b*t + a*t^m is not positive on the integration interval (minimum {lowest:.6g})",
            field="b",
            value=p.b,
        )
    terms = (x * term / (n + 1) for n, term in enumerate(_taylor_terms(p, x)))
    return sum_series(
        terms,
        tol=tol,
        max_terms=cfg.max_terms,
        stall_window=max(2, p.m),
        cancellation_ratio=cfg.cancellation_ratio,
    )
