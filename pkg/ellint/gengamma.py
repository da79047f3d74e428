"""
Generalized Gamma functions

    Gamma(x1, xm | nu; m)   = int_0^inf exp(-x1 t - xm t^m) t^(nu-1) dt
    Gamma(x1, x2, x3 | nu)  = int_0^inf exp(-x1 t - x2 t^2 - x3 t^3) t^(nu-1) dt

with their series expansions, translation identities and the Hermite functions built on them.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Iterator, List, Optional

import numpy as np
from numpy.polynomial import Polynomial
from scipy import special

from .config import NumericsSettings, resolve
from .exceptions import ConvergenceError, DomainError, GammaPoleError
from .hermite import hermite_gh
from .models import EvalReport, GammaArgs2, GammaArgs3, PolyIndex, SeriesValue, Strategy
from .oracles.quadrature import quad_half_line
from .reports import report_from_quadrature, report_from_series, series_acceptable
from .summation import partial_sum, sum_series

logger = logging.getLogger(__name__)


def _check_pole(arg: float, index: int) -> None:
    if arg <= 0.0 and arg == math.floor(arg):
        raise GammaPoleError(f"Gamma argument {arg} of term r={index} sits on a pole", index=index, value=arg)


def _validate2(g: GammaArgs2) -> None:
    if not g.xm > 0.0:
        raise DomainError(f"xm must be positive, got {g.xm}", field="xm", value=g.xm)
    if not g.m >= 1.0:
        raise DomainError(f"m must be at least 1, got {g.m}", field="m", value=g.m)
    if g.m == 1.0 and not g.x1 + g.xm > 0.0:
        raise DomainError(
            f"With m = 1 the integral needs x1 + xm > 0, got {g.x1 + g.xm}",
            field="x1",
            value=g.x1,
        )


def _validate3(g: GammaArgs3) -> None:
    if not g.x3 > 0.0:
        raise DomainError(f"x3 must be positive, got {g.x3}", field="x3", value=g.x3)


def _require_positive_nu(nu: float) -> None:
    if not nu > 0.0:
        raise DomainError(f"The defining integral needs nu > 0, got {nu}", field="nu", value=nu)


def _gamma2_terms(g: GammaArgs2) -> Iterator[float]:
    """(1/m) (-x1)^r / r! * xm^(-(nu+r)/m) * Gamma((nu+r)/m), built in log space."""
    log_xm = math.log(g.xm)
    log_m = math.log(g.m)
    log_x1 = math.log(abs(g.x1)) if g.x1 != 0.0 else 0.0
    sign_x1 = -math.copysign(1.0, g.x1)
    r = 0
    while True:
        arg = (g.nu + r) / g.m
        _check_pole(arg, r)
        log_mag = r * log_x1 - special.gammaln(r + 1) - arg * log_xm + special.gammaln(arg) - log_m
        yield float(special.gammasgn(arg)) * sign_x1**r * math.exp(log_mag)
        if g.x1 == 0.0:
            return
        r += 1


def gengamma2_series(
    g: GammaArgs2,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """Power series of Gamma(x1, xm | nu; m) in x1.

    For m = 1 this is a binomial series and only converges for |x1| < xm.
    """
    cfg, tol = resolve(settings, tol)
    _validate2(g)
    return sum_series(
        _gamma2_terms(g),
        tol=tol,
        max_terms=cfg.max_terms,
        cancellation_ratio=cfg.cancellation_ratio,
    )


def _log_integrand(nu: float, exponent: Callable[[float], float]) -> Callable[[float], float]:
    def integrand(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return float(np.exp((nu - 1.0) * np.log(t) - exponent(t)))

    return integrand


def gengamma2_quad(
    g: GammaArgs2,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Defining integral of Gamma(x1, xm | nu; m) by adaptive quadrature."""
    cfg, tol = resolve(settings, tol)
    _validate2(g)
    _require_positive_nu(g.nu)
    integrand = _log_integrand(g.nu, lambda t: g.x1 * t + g.xm * np.power(t, g.m))
    result = quad_half_line(integrand, tol, split=g.xm ** (-1.0 / g.m), settings=cfg)
    return report_from_quadrature(result, f"Gamma({g.x1}, {g.xm} | {g.nu}; {g.m})")


def gengamma2(
    g: GammaArgs2,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    """Gamma(x1, xm | nu; m) by series, quadrature, or series with quadrature fallback."""
    cfg, tol = resolve(settings, tol)
    _validate2(g)
    if strategy is Strategy.QUADRATURE:
        return gengamma2_quad(g, tol, cfg)
    if strategy is Strategy.SERIES:
        return report_from_series(gengamma2_series(g, tol, cfg))

    warnings: List[str] = []
    ratio = abs(g.x1) / g.xm ** (1.0 / g.m)
    if ratio > cfg.fallback_ratio and g.nu > 0.0:
        logger.info("Crossover |x1|/xm^(1/m) = %.3g, using quadrature", ratio)
        warnings.append(f"crossover: |x1|/xm^(1/m) = {ratio:.3g} > {cfg.fallback_ratio:g}, series skipped")
        return _quad_with_warnings(g, tol, cfg, warnings)

    sv = gengamma2_series(g, tol, cfg)
    if series_acceptable(sv, tol):
        return report_from_series(sv)
    if not g.nu > 0.0:
        report = report_from_series(sv)
        raise ConvergenceError(
            f"Series for Gamma({g.x1}, {g.xm} | {g.nu}; {g.m}) failed and nu <= 0 has no quadrature path",
            estimate=report.value,
            abs_err_est=report.abs_err_est,
        )
    logger.info("Series for Gamma(%s, %s | %s; %s) not acceptable, falling back to quadrature", g.x1, g.xm, g.nu, g.m)
    warnings.append(
        f"fallback: series stopped after {sv.terms_used} terms "
        f"(converged={sv.converged}, cancellation={sv.cancellation_flag}), used quadrature"
    )
    return _quad_with_warnings(g, tol, cfg, warnings)


def _quad_with_warnings(g: GammaArgs2, tol: float, cfg: NumericsSettings, warnings: List[str]) -> EvalReport:
    report = gengamma2_quad(g, tol, cfg)
    return report.model_copy(update={"warnings": warnings + report.warnings})


def gengamma3(
    g: GammaArgs3,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """Gamma(x1, x2, x3 | nu) = (1/3) sum_r H_r^(2)(-x1, -x2) / r! * x3^(-(r+nu)/3) Gamma((r+nu)/3)."""
    cfg, tol = resolve(settings, tol)
    _validate3(g)
    _require_positive_nu(g.nu)
    cap = min(cfg.max_terms, cfg.hermite_max_degree + 1)
    log_x3 = math.log(g.x3)

    def terms() -> Iterator[float]:
        for r in range(cap):
            h = hermite_gh(PolyIndex(n=r, m=2), -g.x1, -g.x2, cfg)
            arg = (r + g.nu) / 3.0
            if h == 0.0:
                yield 0.0
                continue
            yield h * math.exp(special.gammaln(arg) - special.gammaln(r + 1) - arg * log_x3) / 3.0

    return sum_series(terms(), tol=tol, max_terms=cap, cancellation_ratio=cfg.cancellation_ratio)


def gengamma3_quad(
    g: GammaArgs3,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> EvalReport:
    cfg, tol = resolve(settings, tol)
    _validate3(g)
    _require_positive_nu(g.nu)
    integrand = _log_integrand(g.nu, lambda t: t * (g.x1 + t * (g.x2 + t * g.x3)))
    result = quad_half_line(integrand, tol, split=g.x3 ** (-1.0 / 3.0), settings=cfg)
    return report_from_quadrature(result, f"Gamma({g.x1}, {g.x2}, {g.x3} | {g.nu})")


def _gamma3_value(g: GammaArgs3, tol: float, cfg: NumericsSettings) -> float:
    sv = gengamma3(g, tol, cfg)
    if series_acceptable(sv, tol):
        return sv.value
    logger.info("Three-variable series not acceptable after %s terms, using quadrature", sv.terms_used)
    return gengamma3_quad(g, tol, cfg).value


def _gamma2_value(g: GammaArgs2, tol: float, cfg: NumericsSettings) -> float:
    report = gengamma2(g, tol, Strategy.AUTO, cfg)
    if not report.converged:
        raise ConvergenceError(
            f"Gamma({g.x1}, {g.xm} | {g.nu}; {g.m}) did not converge",
            estimate=report.value,
            abs_err_est=report.abs_err_est,
        )
    return report.value


def hermite_fn(
    nu: float,
    x: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> float:
    """Hermite function H_nu(x) = (1/Gamma(-nu)) int_0^inf exp(-2 x t - t^2) t^(-nu-1) dt, nu < 0."""
    return hermite_fn_m(nu, 2.0 * x, 1.0, 2.0, tol, settings)


def hermite_fn_m(
    nu: float,
    x1: float,
    xm: float,
    m: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> float:
    """H_nu^(m)(x1, xm) = Gamma(x1, xm | -nu; m) / Gamma(-nu) for nu < 0."""
    cfg, tol = resolve(settings, tol)
    if not nu < 0.0:
        raise DomainError(f"Hermite functions are defined here for nu < 0, got {nu}", field="nu", value=nu)
    value = _gamma2_value(GammaArgs2(x1=x1, xm=xm, nu=-nu, m=m), tol, cfg)
    return value / float(special.gamma(-nu))


def h_minus_order(
    n: int,
    x1: float,
    xm: float,
    m: float,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> float:
    """H_{-(n+1)}^(m)(x1, xm) = (1/n!) int_0^inf t^n exp(-x1 t - xm t^m) dt."""
    cfg, tol = resolve(settings, tol)
    if n < 0:
        raise DomainError(f"Order index must be non-negative, got {n}", field="n", value=n)
    value = _gamma2_value(GammaArgs2(x1=x1, xm=xm, nu=n + 1.0, m=m), tol, cfg)
    return value * math.exp(-special.gammaln(n + 1))


def h_minus_order_by_derivative(
    n: int,
    x1: float,
    xm: float,
    m: float,
    settings: Optional[NumericsSettings] = None,
) -> float:
    """H_{-(n+1)}^(m) as ((-1)^n / n!) d^n/dx1^n H_{-1}^(m), from the x1 power series of H_{-1}."""
    cfg, _ = resolve(settings)
    if n < 0:
        raise DomainError(f"Order index must be non-negative, got {n}", field="n", value=n)
    g = GammaArgs2(x1=x1, xm=xm, nu=1.0, m=m)
    _validate2(g)
    if m == 1.0 and not abs(x1) < xm:
        raise DomainError(f"With m = 1 the power series needs |x1| < xm, got x1={x1}", field="x1", value=x1)
    log_xm = math.log(xm)
    coeffs = []
    for r in range(cfg.max_terms):
        arg = (1.0 + r) / m
        log_mag = -special.gammaln(r + 1) - arg * log_xm + special.gammaln(arg) - math.log(m)
        coeffs.append((-1.0) ** r * math.exp(log_mag) if log_mag > -745.0 else 0.0)
    poly = Polynomial(coeffs).trim()
    derivative = poly.deriv(n) if n > 0 else poly
    return (-1.0) ** n * float(derivative(x1)) * math.exp(-special.gammaln(n + 1))


def h_minus1_gf_partial(
    z: float,
    x1: float,
    xm: float,
    m: float,
    N: int,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """Partial sum of sum_n z^n H_{-n-1}^(m)(x1, xm), whose limit is H_{-1}^(m)(x1 - z, xm)."""
    cfg, tol = resolve(settings, tol)
    if N < 0:
        raise DomainError(f"Truncation index must be non-negative, got {N}", field="N", value=N)
    if m == 1.0 and not abs(z) < x1 + xm:
        raise DomainError(f"With m = 1 the generating function needs |z| < x1 + xm, got z={z}", field="z", value=z)

    powers = [1.0]
    for _ in range(N + 1):
        powers.append(powers[-1] * z)
    terms = [powers[n] * h_minus_order(n, x1, xm, m, tol, cfg) for n in range(N + 1)]
    tail = powers[N + 1] * h_minus_order(N + 1, x1, xm, m, tol, cfg)
    return partial_sum(terms, trunc_estimate=tail, tol=tol, cancellation_ratio=cfg.cancellation_ratio)


def h_minus1_erf_form(x1: float, x2: float) -> float:
    """H_{-1}^(2)(x1, x2) = (1/2) sqrt(pi/x2) exp(x1^2/(4 x2)) erfc(x1/(2 sqrt(x2)))."""
    if not x2 > 0.0:
        raise DomainError(f"x2 must be positive, got {x2}", field="x2", value=x2)
    return 0.5 * math.sqrt(math.pi / x2) * float(special.erfcx(x1 / (2.0 * math.sqrt(x2))))


def _shift_series(
    values: Callable[[int], float],
    factor: float,
    N: int,
    tol: float,
    cfg: NumericsSettings,
) -> SeriesValue:
    """sum_{k<=N} factor^k / k! * values(k) with the k = N + 1 term as truncation estimate."""
    if N < 0:
        raise DomainError(f"Truncation index must be non-negative, got {N}", field="N", value=N)
    weights = [1.0]
    for k in range(1, N + 2):
        weights.append(weights[-1] * factor / k)
    terms = [weights[k] * values(k) for k in range(N + 1)]
    tail = weights[N + 1] * values(N + 1) if weights[N + 1] != 0.0 else 0.0
    return partial_sum(terms, trunc_estimate=tail, tol=tol, cancellation_ratio=cfg.cancellation_ratio)


def gengamma2_heat_shift(
    g: GammaArgs2,
    z: float,
    N: int,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """sum_k z^k/k! Gamma(x1, x2 | nu + 2k; 2), the expansion of Gamma(x1, x2 - z | nu; 2)."""
    cfg, tol = resolve(settings, tol)
    _validate2(g)
    _require_positive_nu(g.nu)
    if g.m != 2.0:
        raise DomainError(f"The heat-operator shift is defined for m = 2, got {g.m}", field="m", value=g.m)
    if not abs(z) < g.xm:
        raise DomainError(f"Shift needs |z| < x2, got z={z}", field="z", value=z)
    return _shift_series(
        lambda k: _gamma2_value(g.model_copy(update={"nu": g.nu + 2 * k}), tol, cfg),
        z,
        N,
        tol,
        cfg,
    )


def gengamma3_shift_x2(
    g: GammaArgs3,
    z: float,
    N: int,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """sum_k z^k/k! Gamma(x1, x2, x3 | nu + 2k), the expansion of Gamma(x1, x2 - z, x3 | nu)."""
    cfg, tol = resolve(settings, tol)
    _validate3(g)
    _require_positive_nu(g.nu)
    return _shift_series(
        lambda k: _gamma3_value(g.model_copy(update={"nu": g.nu + 2 * k}), tol, cfg),
        z,
        N,
        tol,
        cfg,
    )


def gengamma3_shift_x3(
    g: GammaArgs3,
    z: float,
    N: int,
    tol: Optional[float] = None,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """sum_k (-z)^k/k! Gamma(x1, x2, x3 | nu + 3k), the expansion of Gamma(x1, x2, x3 + z | nu)."""
    cfg, tol = resolve(settings, tol)
    _validate3(g)
    _require_positive_nu(g.nu)
    if not abs(z) < g.x3:
        raise DomainError(f"Shift needs |z| < x3, got z={z}", field="z", value=z)
    return _shift_series(
        lambda k: _gamma3_value(g.model_copy(update={"nu": g.nu + 3 * k}), tol, cfg),
        -z,
        N,
        tol,
        cfg,
    )
