"""
Adaptive quadrature oracles built on QUADPACK.

Half-line and full-line integrals are split at a caller-chosen point; the infinite pieces are
handled by QUADPACK's own rational map of the infinite range onto (0, 1]. These paths share no
code with the series modules so that agreement between the two is meaningful.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import integrate

from ..config import NumericsSettings, resolve
from ..exceptions import DomainError
from ..models import QuadResult

logger = logging.getLogger(__name__)

Integrand = Callable[[float], float]


def _integrate(f: Integrand, lo: float, hi: float, tol: float, limit: int) -> Tuple[float, float, int, bool]:
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        out = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=tol, limit=limit, full_output=1)
    value, abserr, info = out[0], out[1], out[2]
    # QUADPACK appends a message only when ier != 0.
    ok = len(out) == 3 and math.isfinite(value)
    if not ok:
        message = out[3] if len(out) > 3 else "non-finite result"
        logger.debug("QUADPACK on [%s, %s] reported: %s", lo, hi, message)
    return float(value), float(abserr), int(info.get("neval", 0)), ok


def _combine(pieces: list[Tuple[float, float, int, bool]]) -> QuadResult:
    value = math.fsum(p[0] for p in pieces)
    return QuadResult(
        value=value,
        abs_err_est=sum(p[1] for p in pieces),
        evaluations=sum(p[2] for p in pieces),
        converged=all(p[3] for p in pieces),
    )


def quad_half_line(
    f: Integrand,
    tol: Optional[float] = None,
    *,
    split: float = 1.0,
    settings: Optional[NumericsSettings] = None,
) -> QuadResult:
    """Integrate ``f`` over [0, inf) as [0, split] + [split, inf)."""
    cfg, tol = resolve(settings, tol)
    if not split > 0.0 or not math.isfinite(split):
        raise DomainError(f"Split point must be positive and finite, got {split}", field="split", value=split)
    return _combine(
        [
            _integrate(f, 0.0, split, tol, cfg.quad_limit),
            _integrate(f, split, math.inf, tol, cfg.quad_limit),
        ]
    )


def quad_full_line(
    f: Integrand,
    tol: Optional[float] = None,
    *,
    center: float = 0.0,
    settings: Optional[NumericsSettings] = None,
) -> QuadResult:
    """Integrate ``f`` over the real line as (-inf, center] + [center, inf)."""
    cfg, tol = resolve(settings, tol)
    return _combine(
        [
            _integrate(f, -math.inf, center, tol, cfg.quad_limit),
            _integrate(f, center, math.inf, tol, cfg.quad_limit),
        ]
    )


def quad_finite(
    f: Integrand,
    lo: float,
    hi: float,
    tol: Optional[float] = None,
    *,
    settings: Optional[NumericsSettings] = None,
) -> QuadResult:
    cfg, tol = resolve(settings, tol)
    if lo > hi:
        raise DomainError(f"Lower limit {lo} exceeds upper limit {hi}", field="lo", value=lo)
    if lo == hi:
        return QuadResult(value=0.0, abs_err_est=0.0, evaluations=0, converged=True)
    return _combine([_integrate(f, lo, hi, tol, cfg.quad_limit)])
