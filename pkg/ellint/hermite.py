"""
Gould-Hopper polynomials H_n^(m)(x, y), their generating function and the Gamma-weighted
variant used by the cubic hyper-elliptic series.
"""
from __future__ import annotations

import logging
import math
import sys
from typing import Iterator, List, Optional, Tuple

from scipy import special

from .config import NumericsSettings, get_settings
from .exceptions import DegreeRangeError, DomainError, GammaPoleError
from .models import PolyIndex, SeriesValue
from .summation import CompensatedSum, partial_sum, scaled_exp_sum

logger = logging.getLogger(__name__)

_TINY = sys.float_info.min


def _is_exact(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def multinomial_weights(n: int, m: int) -> Iterator[Tuple[int, int]]:
    """Yield ``(r, n! / ((n - m r)! r!))`` for r = 0 .. n // m as exact integers."""
    weight = 1
    for r in range(n // m + 1):
        yield r, weight
        j = n - m * r
        falling = 1
        for i in range(m):
            falling *= j - i
        weight = weight * falling // (r + 1)


def _check_degree(n: int, cfg: NumericsSettings) -> None:
    if n > cfg.hermite_max_degree:
        raise DegreeRangeError(n, cfg.hermite_max_degree)


def _log_terms(n: int, m: int, x: float, y: float) -> Iterator[Tuple[float, float]]:
    """Yield ``(log|term|, sign)`` for each term of H_n^(m)(x, y); vanishing terms are skipped."""
    log_nfact = special.gammaln(n + 1)
    for r in range(n // m + 1):
        j = n - m * r
        if (x == 0.0 and j > 0) or (y == 0.0 and r > 0):
            continue
        log_mag = log_nfact - special.gammaln(j + 1) - special.gammaln(r + 1)
        sign = 1.0
        if j > 0:
            log_mag += j * math.log(abs(x))
            sign *= math.copysign(1.0, x) ** j
        if r > 0:
            log_mag += r * math.log(abs(y))
            sign *= math.copysign(1.0, y) ** r
        yield float(log_mag), sign


def _float_terms(n: int, m: int, x: float, y: float) -> Optional[List[float]]:
    """Terms from the ratio recurrence, or None when a step leaves the normal float range."""
    if x == 0.0:
        return None
    try:
        lead = x**n
        power_m = x**m
    except OverflowError:
        return None
    if abs(lead) < _TINY or abs(power_m) < _TINY or not math.isfinite(y / power_m):
        return None
    ratio = y / power_m
    terms = []
    term = lead
    for r in range(n // m + 1):
        if not math.isfinite(term):
            return None
        terms.append(term)
        j = n - m * r
        falling = 1.0
        for i in range(m):
            falling *= j - i
        term *= falling * ratio / (r + 1)
    return terms


def hermite_gh(
    idx: PolyIndex,
    x: float,
    y: float,
    settings: Optional[NumericsSettings] = None,
) -> float:
    """H_n^(m)(x, y) = n! sum_r x^(n-mr) y^r / ((n-mr)! r!).

    Integer arguments are summed exactly; floats use a term recurrence that folds the
    factorial ratio into each step, or log-space terms when the recurrence would leave the
    normal float range. Values beyond the double range come back as +-inf.
    """
    cfg = settings or get_settings()
    _check_degree(idx.n, cfg)
    if _is_exact(x) and _is_exact(y):
        total = sum(w * x ** (idx.n - idx.m * r) * y**r for r, w in multinomial_weights(idx.n, idx.m))
        try:
            return float(total)
        except OverflowError:
            return math.copysign(math.inf, total)
    terms = _float_terms(idx.n, idx.m, float(x), float(y))
    if terms is None:
        return scaled_exp_sum(_log_terms(idx.n, idx.m, float(x), float(y)))
    acc = CompensatedSum()
    for term in terms:
        acc.add(term)
    return acc.value


def hermite_gf_partial(
    t: float,
    x: float,
    y: float,
    m: int,
    N: int,
    settings: Optional[NumericsSettings] = None,
) -> SeriesValue:
    """Partial sum of exp(x t + y t^m) = sum_n t^n / n! H_n^(m)(x, y) up to n = N."""
    cfg = settings or get_settings()
    if N < 0:
        raise DomainError(f"Truncation index must be non-negative, got {N}", field="N", value=N)
    if m < 1:
        raise DomainError(f"Order m must be at least 1, got {m}", field="m", value=m)
    _check_degree(N + 1, cfg)

    factors = [1.0]
    for n in range(1, N + 2):
        factors.append(factors[-1] * t / n)

    def terms() -> Iterator[float]:
        for n in range(N + 1):
            if factors[n] == 0.0:
                yield 0.0
                continue
            yield factors[n] * hermite_gh(PolyIndex(n=n, m=m), x, y, cfg)

    tail = 0.0
    if factors[N + 1] != 0.0:
        tail = factors[N + 1] * hermite_gh(PolyIndex(n=N + 1, m=m), x, y, cfg)
    return partial_sum(
        terms(),
        trunc_estimate=tail,
        tol=cfg.tol,
        cancellation_ratio=cfg.cancellation_ratio,
    )


def weighted_log_terms(n: int, x: float, y: float, nu: float) -> Iterator[Tuple[int, float, float]]:
    """Terms of H~_n^(2)(x, y) / n! as ``(r, log|term|, sign)``.

    Term r is x^(n-2r) y^r / ((n-2r)! r!) * Gamma((2n + 3(nu - r) - 1) / 3). Vanishing
    terms are skipped.
    """
    for r in range(n // 2 + 1):
        arg = (2 * n + 3 * (nu - r) - 1) / 3.0
        if arg <= 0.0 and arg == math.floor(arg):
            raise GammaPoleError(
                f"Gamma argument {arg} of term r={r} sits on a pole",
                index=r,
                value=arg,
            )
        j = n - 2 * r
        if (x == 0.0 and j > 0) or (y == 0.0 and r > 0):
            continue
        log_mag = special.gammaln(arg) - special.gammaln(j + 1) - special.gammaln(r + 1)
        sign = float(special.gammasgn(arg))
        if j > 0:
            log_mag += j * math.log(abs(x))
            sign *= math.copysign(1.0, x) ** j
        if r > 0:
            log_mag += r * math.log(abs(y))
            sign *= math.copysign(1.0, y) ** r
        yield r, float(log_mag), sign


def hermite_weighted(
    n: int,
    x: float,
    y: float,
    nu: float,
    settings: Optional[NumericsSettings] = None,
) -> float:
    """Gamma-weighted polynomial H~_n^(2)(x, y) of the cubic hyper-elliptic series."""
    cfg = settings or get_settings()
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}", field="n", value=n)
    _check_degree(n, cfg)
    log_nfact = float(special.gammaln(n + 1))
    return scaled_exp_sum((log_mag + log_nfact, sign) for _, log_mag, sign in weighted_log_terms(n, x, y, nu))
