"""
Elliptic-type and hyper-elliptic integrals.

    F(a, b | nu)          = int_R (1 + b x + a x^2)^(-nu) dx
    Phi(a, b | nu, m)     = int_0^inf (1 + b x + a x^m)^(-nu) dx
    Phi(a1, a2, a3 | nu)  = int_0^inf (1 + a1 x + a2 x^2 + a3 x^3)^(-nu) dx

Closed forms are used where they exist; the rest go through the umbral series or the cubic
Gamma-weighted Hermite series, with adaptive quadrature as the fallback and as the oracle.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Iterator, List, Optional

import numpy as np
from scipy import special

from .config import NumericsSettings, resolve
from .exceptions import ConvergenceError, DomainError, QuadratureError
from .gengamma import gengamma2
from .hermite import weighted_log_terms
from .models import EvalReport, GammaArgs2, Method, QPolyParams, SeriesValue, Strategy
from .oracles.quadrature import quad_finite, quad_full_line, quad_half_line
from .polynomials import min_on_interval, trinomial_coeffs, trinomial_min
from .qpoly import incomplete_integral
from .reports import report_from_quadrature, report_from_series, series_acceptable
from .summation import CompensatedSum, sum_series

logger = logging.getLogger(__name__)


def _closed_form(value: float) -> EvalReport:
    return EvalReport(value=float(value), abs_err_est=0.0, method=Method.CLOSED_FORM)


def _require(condition: bool, message: str, field: str, value: float) -> None:
    if not condition:
        raise DomainError(message, field=field, value=value)


def f_quadratic(a: float, nu: float) -> EvalReport:
    """int_R (1 + a x^2)^(-nu) dx = sqrt(pi/a) Gamma(nu - 1/2) / Gamma(nu)."""
    _require(a > 0.0, f"a must be positive, got {a}", "a", a)
    _require(nu > 0.5, f"nu must exceed 1/2, got {nu}", "nu", nu)
    return _closed_form(math.sqrt(math.pi / a) / special.poch(nu - 0.5, 0.5))


def f_quadratic_linear(a: float, b: float, nu: float) -> EvalReport:
    _require(a > 0.0, f"a must be positive, got {a}", "a", a)
    _require(b * b < 4.0 * a, f"Need b^2 < 4a for a positive integrand, got a={a}, b={b}", "b", b)
    base = f_quadratic(a, nu).value
    return _closed_form(base * (1.0 / (1.0 - b * b / (4.0 * a))) ** (nu - 0.5))


def phi_monomial(a: float, nu: float, m: float) -> EvalReport:
    """int_0^inf (1 + a x^m)^(-nu) dx = Gamma(1/m) Gamma(nu - 1/m) / (m a^(1/m) Gamma(nu))."""
    _require(m >= 1.0, f"m must be at least 1, got {m}", "m", m)
    _require(a > 0.0, f"a must be positive, got {a}", "a", a)
    _require(nu > 1.0 / m, f"nu must exceed 1/m = {1.0 / m:.6g}, got {nu}", "nu", nu)
    inv = 1.0 / m
    return _closed_form(special.gamma(inv) / special.poch(nu - inv, inv) / (m * a**inv))


def _check_half_general(a: float, b: float, nu: float, m: float) -> None:
    _require(m >= 1.0, f"m must be at least 1, got {m}", "m", m)
    _require(a > 0.0, f"a must be positive, got {a}", "a", a)
    _require(nu > 1.0 / m, f"nu must exceed 1/m = {1.0 / m:.6g}, got {nu}", "nu", nu)
    if m == 1.0:
        _require(a + b > 0.0, f"With m = 1 the integral needs a + b > 0, got {a + b}", "b", b)
    elif b < 0.0:
        if m == 2.0:
            _require(b * b < 4.0 * a, f"Need b^2 < 4a for a positive integrand, got a={a}, b={b}", "b", b)
        else:
            lowest = trinomial_min(a, b, m)
            _require(lowest > 0.0, f"1 + b x + a x^m reaches {lowest:.6g} on [0, inf)", "b", b)


def oracle_full_line(
    a: float,
    b: float,
    nu: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Quadrature of (1 + b x + a x^2)^(-nu) over the real line, split at the minimum."""
    _require(a > 0.0, f"a must be positive, got {a}", "a", a)
    _require(b * b < 4.0 * a, f"Need b^2 < 4a for a positive integrand, got a={a}, b={b}", "b", b)

    def integrand(x: float) -> float:
        return float(np.power(1.0 + x * (b + a * x), -nu))

    result = quad_full_line(integrand, tol, center=-b / (2.0 * a), settings=settings)
    return report_from_quadrature(result, f"F({a}, {b} | {nu})")


def oracle_half_line(
    a: float,
    b: float,
    nu: float,
    m: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Quadrature of (1 + b x + a x^m)^(-nu) over [0, inf)."""
    _check_half_general(a, b, nu, m)

    def integrand(x: float) -> float:
        return float(np.power(1.0 + b * x + a * np.power(x, m), -nu))

    result = quad_half_line(integrand, tol, split=a ** (-1.0 / m), settings=settings)
    return report_from_quadrature(result, f"Phi({a}, {b} | {nu}, {m})")


def _series_or_fallback(
    what: str,
    series: Callable[[], SeriesValue],
    quadrature: Callable[[], EvalReport],
    method: Method,
    tol: float,
    strategy: Strategy,
) -> EvalReport:
    if strategy is Strategy.QUADRATURE:
        return quadrature()
    try:
        sv = series()
    except DomainError as exc:
        if strategy is Strategy.SERIES:
            raise
        logger.info("Series for %s outside its domain (%s), falling back to quadrature", what, exc)
        report = quadrature()
        note = f"fallback: series outside its domain ({exc}), used quadrature"
        return report.model_copy(update={"warnings": [note] + report.warnings})
    if strategy is Strategy.SERIES or series_acceptable(sv, tol):
        return report_from_series(sv, method)
    logger.info("Series for %s not acceptable after %s terms, falling back to quadrature", what, sv.terms_used)
    note = (
        f"fallback: series stopped after {sv.terms_used} terms "
        f"(converged={sv.converged}, cancellation={sv.cancellation_flag}), used quadrature"
    )
    try:
        report = quadrature()
    except QuadratureError as exc:
        raise ConvergenceError(
            f"Series for {what} did not converge and the quadrature fallback failed: {exc}",
            estimate=sv.value,
            abs_err_est=exc.abs_err_est,
        ) from exc
    return report.model_copy(update={"warnings": [note] + report.warnings})


def _umbral_terms(a: float, b: float, nu: float, m: float) -> Iterator[float]:
    """(1/(m Gamma(nu))) (-b)^r / r! a^(-(1+r)/m) Gamma((m nu + (m-1) r - 1)/m) Gamma((1+r)/m)."""
    log_a = math.log(a)
    log_b = math.log(abs(b)) if b != 0.0 else 0.0
    sign_b = -math.copysign(1.0, b)
    shift = special.gammaln(nu) + math.log(m)
    r = 0
    while True:
        upper = (m * nu + (m - 1.0) * r - 1.0) / m
        inner = (1.0 + r) / m
        log_mag = (
            r * log_b
            - special.gammaln(r + 1)
            - inner * log_a
            + special.gammaln(upper)
            + special.gammaln(inner)
            - shift
        )
        yield sign_b**r * math.exp(log_mag)
        if b == 0.0:
            return
        r += 1


def phi_general(
    a: float,
    b: float,
    nu: float,
    m: float,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Phi(a, b | nu, m) by the umbral series in b, with quadrature fallback.

    The series converges geometrically with ratio |b| a^(-1/m) (m-1)^((m-1)/m) / m.
    """
    cfg, tol = resolve(settings, tol)
    _check_half_general(a, b, nu, m)
    return _series_or_fallback(
        f"Phi({a}, {b} | {nu}, {m})",
        lambda: sum_series(
            _umbral_terms(a, b, nu, m),
            tol=tol,
            max_terms=cfg.max_terms,
            cancellation_ratio=cfg.cancellation_ratio,
        ),
        lambda: oracle_half_line(a, b, nu, m, tol, cfg),
        Method.UMBRAL_SERIES,
        tol,
        strategy,
    )


def phi_general_nested(
    a: float,
    b: float,
    nu: float,
    m: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """(1/Gamma(nu)) int_0^inf exp(-s) s^(nu-1) Gamma(s b, s a | 1; m) ds by nested evaluation."""
    cfg, tol = resolve(settings, tol)
    _check_half_general(a, b, nu, m)
    inner_tol = max(tol * 1e-3, 1e-14)
    log_gamma_nu = float(special.gammaln(nu))

    def integrand(s: float) -> float:
        if s <= 0.0:
            return 0.0
        inner = gengamma2(GammaArgs2(x1=s * b, xm=s * a, nu=1.0, m=m), inner_tol, Strategy.AUTO, cfg)
        return inner.value * math.exp((nu - 1.0) * math.log(s) - s - log_gamma_nu)

    result = quad_half_line(integrand, tol, split=max(1.0, nu), settings=cfg)
    report = report_from_quadrature(result, f"nested Phi({a}, {b} | {nu}, {m})")
    return report.model_copy(update={"warnings": [f"nested evaluation with inner tolerance {inner_tol:g}"]})


def _check_hyper3(a1: float, a2: float, a3: float, nu: float) -> None:
    _require(a3 > 0.0, f"a3 must be positive, got {a3}", "a3", a3)
    _require(nu > 1.0 / 3.0, f"nu must exceed 1/3, got {nu}", "nu", nu)
    if min(a1, a2) < 0.0:
        lowest = min_on_interval([1.0, a1, a2, a3], 0.0)
        # Blame a1 only when it is the sole negative coefficient.
        field, value = ("a1", a1) if a2 >= 0.0 else ("a2", a2)
        _require(lowest > 0.0, f"1 + a1 x + a2 x^2 + a3 x^3 reaches {lowest:.6g} on [0, inf)", field, value)


def oracle_hyper3(
    a1: float,
    a2: float,
    a3: float,
    nu: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    _check_hyper3(a1, a2, a3, nu)

    def integrand(x: float) -> float:
        return float(np.power(1.0 + x * (a1 + x * (a2 + x * a3)), -nu))

    result = quad_half_line(integrand, tol, split=a3 ** (-1.0 / 3.0), settings=settings)
    return report_from_quadrature(result, f"Phi({a1}, {a2}, {a3} | {nu})")


def _hyper3_terms(a1: float, a2: float, a3: float, nu: float) -> Iterator[float]:
    """(1/(3 Gamma(nu))) H~_n(-a1, -a2) / n! * a3^(-(n+1)/3) Gamma((n+1)/3) for n = 0, 1, ..."""
    log_a3 = math.log(a3)
    shift = special.gammaln(nu) + math.log(3.0)
    n = 0
    while True:
        arg = (n + 1.0) / 3.0
        outer = special.gammaln(arg) - arg * log_a3 - shift
        acc = CompensatedSum()
        for _, log_mag, sign in weighted_log_terms(n, -a1, -a2, nu):
            acc.add(sign * math.exp(log_mag + outer))
        yield acc.value
        n += 1


def phi_hyperelliptic3(
    a1: float,
    a2: float,
    a3: float,
    nu: float,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Cubic hyper-elliptic Phi by the Gamma-weighted Hermite series, with quadrature fallback."""
    cfg, tol = resolve(settings, tol)
    _check_hyper3(a1, a2, a3, nu)
    return _series_or_fallback(
        f"Phi({a1}, {a2}, {a3} | {nu})",
        lambda: sum_series(
            _hyper3_terms(a1, a2, a3, nu),
            tol=tol,
            max_terms=cfg.max_terms,
            cancellation_ratio=cfg.cancellation_ratio,
        ),
        lambda: oracle_hyper3(a1, a2, a3, nu, tol, cfg),
        Method.SERIES,
        tol,
        strategy,
    )


def _check_incomplete(p: QPolyParams, x: float) -> None:
    lo, hi = min(0.0, x), max(0.0, x)
    lowest = min_on_interval(trinomial_coeffs(p.a, p.b, p.m), lo, hi)
    _require(lowest > 0.0, f"1 + b t + a t^m reaches {lowest:.6g} on [{lo}, {hi}]", "b", p.b)


def oracle_incomplete(
    p: QPolyParams,
    x: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Finite-interval quadrature of G over [0, x], negated for x < 0."""
    _check_incomplete(p, x)

    def integrand(t: float) -> float:
        return float(np.power(1.0 + p.b * t + p.a * np.power(t, p.m), -p.nu))

    if x >= 0.0:
        return report_from_quadrature(quad_finite(integrand, 0.0, x, tol, settings=settings), "incomplete integral")
    report = report_from_quadrature(quad_finite(integrand, x, 0.0, tol, settings=settings), "incomplete integral")
    return report.model_copy(update={"value": -report.value})


def incomplete_report(
    p: QPolyParams,
    x: float,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    cfg, tol = resolve(settings, tol)
    return _series_or_fallback(
        f"incomplete integral to x={x}",
        lambda: incomplete_integral(p, x, tol, cfg),
        lambda: oracle_incomplete(p, x, tol, cfg),
        Method.SERIES,
        tol,
        strategy,
    )


def laplace_power_identity(
    A: float,
    nu: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """(1/Gamma(nu)) int_0^inf exp(-s A) s^(nu-1) ds by quadrature; equals A^(-nu)."""
    cfg, tol = resolve(settings, tol)
    _require(A > 0.0, f"A must be positive, got {A}", "A", A)
    _require(nu > 0.0, f"nu must be positive, got {nu}", "nu", nu)
    log_gamma_nu = float(special.gammaln(nu))

    def integrand(s: float) -> float:
        if s <= 0.0:
            return 0.0
        return float(np.exp((nu - 1.0) * np.log(s) - s * A - log_gamma_nu))

    result = quad_half_line(integrand, tol, split=1.0 / A, settings=cfg)
    return report_from_quadrature(result, f"Laplace transform identity at A={A}")


def laplace_peak_approx(
    f: Callable[[float], float],
    x0: float,
    M: float,
    nu: float,
    *,
    fpp: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Approximate int_R (M f(x))^(-nu) dx from the quadratic expansion of f at its minimum x0.

    The error estimate is the first correction from the quartic term of the expansion.
    """
    cfg, _ = resolve(settings)
    _require(M > 0.0, f"M must be positive, got {M}", "M", M)
    _require(nu > 0.5, f"nu must exceed 1/2, got {nu}", "nu", nu)
    f0 = float(f(x0))
    _require(f0 > 0.0, f"f(x0) must be positive, got {f0}", "x0", x0)

    warnings: List[str] = []
    if fpp is None:
        h = max(cfg.peak_step, cfg.peak_step * abs(x0))
        fpp = (float(f(x0 + h)) - 2.0 * f0 + float(f(x0 - h))) / (h * h)
        warnings.append(f"f'' estimated by central differences with step {h:.3g}")
    if not fpp > 0.0:
        raise DomainError(f"f''(x0) = {fpp:.6g} is not positive; x0 is not a non-degenerate minimum", field="x0", value=x0)

    value = (
        math.sqrt(2.0 * math.pi)
        / (M * f0) ** nu
        / special.poch(nu - 0.5, 0.5)
        * math.sqrt(f0 / fpp)
    )

    h4 = max(1e-2, 1e-2 * abs(x0))
    f4 = (
        float(f(x0 + 2 * h4)) - 4.0 * float(f(x0 + h4)) + 6.0 * f0 - 4.0 * float(f(x0 - h4)) + float(f(x0 - 2 * h4))
    ) / h4**4
    if nu > 1.5:
        alpha = fpp / (2.0 * f0)
        beta = f4 / (24.0 * f0)
        error = abs(value) * abs(0.75 * beta / (alpha * alpha * (nu - 1.5)))
    else:
        error = math.inf
        warnings.append(f"no error estimate for nu = {nu} <= 3/2, the quartic correction diverges")
    return EvalReport(
        value=float(value),
        abs_err_est=error,
        method=Method.LAPLACE_PEAK,
        terms_used=0,
        converged=True,
        warnings=warnings,
    )


__all__ = [
    "f_quadratic",
    "f_quadratic_linear",
    "incomplete_report",
    "laplace_peak_approx",
    "laplace_power_identity",
    "oracle_full_line",
    "oracle_half_line",
    "oracle_hyper3",
    "oracle_incomplete",
    "phi_general",
    "phi_general_nested",
    "phi_hyperelliptic3",
    "phi_monomial",
]
