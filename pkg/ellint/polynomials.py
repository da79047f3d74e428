"""Positivity scans for the polynomial denominators of the integral families."""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial


def min_on_interval(coeffs: Sequence[float], lo: float, hi: float = math.inf) -> float:
    """Minimum of the polynomial with ascending ``coeffs`` over [lo, hi].

    Candidates are the finite endpoints and the real critical points inside the interval.
    On a half-infinite interval a negative leading coefficient gives ``-inf``.
    """
    poly = Polynomial(np.asarray(coeffs, dtype=float)).trim()
    candidates = [lo]
    if math.isfinite(hi):
        candidates.append(hi)
    elif poly.degree() > 0 and poly.coef[-1] < 0.0:
        return -math.inf
    if poly.degree() > 1:
        for root in poly.deriv().roots():
            if abs(root.imag) <= 1e-12 * max(1.0, abs(root.real)) and lo < root.real < hi:
                candidates.append(float(root.real))
    return float(min(poly(c) for c in candidates))


def trinomial_min(a: float, b: float, m: float) -> float:
    """Minimum of ``1 + b x + a x**m`` over [0, inf) for a > 0 and real m >= 1."""
    if b >= 0.0:
        return 1.0
    if m == 1.0:
        return 1.0 if a + b >= 0.0 else -math.inf
    x_star = (-b / (m * a)) ** (1.0 / (m - 1.0))
    return 1.0 + b * x_star + a * x_star**m


def trinomial_coeffs(a: float, b: float, m: int) -> list[float]:
    """Ascending coefficients of ``1 + b x + a x**m`` for integer m >= 1."""
    coeffs = [0.0] * (m + 1)
    coeffs[0] = 1.0
    coeffs[1] += b
    coeffs[m] += a
    return coeffs
