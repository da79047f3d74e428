from __future__ import annotations

from typing import Any, Optional


class EllintError(Exception):
    """Base class for ellint exceptions."""


class DomainError(EllintError):
    """Raised when an argument lies outside the domain of an operation."""

    def __init__(self, message: str, *, field: Optional[str] = None, value: Any = None):
        super().__init__(message)
        self.field = field
        self.value = value


class GammaPoleError(DomainError):
    """Raised when a Gamma factor of a series term sits on a pole."""

    def __init__(self, message: str, *, index: int, value: Any = None):
        super().__init__(message, field="index", value=value)
        self.index = index


class DegreeRangeError(EllintError):
    """Raised when a polynomial degree exceeds the supported range."""

    def __init__(self, degree: int, limit: int, message: Optional[str] = None):
        super().__init__(message or f"Degree {degree} exceeds the supported maximum {limit}")
        self.degree = degree
        self.limit = limit


class ConvergenceError(EllintError):
    """Raised when no evaluation path reached the requested tolerance."""

    def __init__(self, message: str, *, estimate: Optional[float] = None, abs_err_est: Optional[float] = None):
        super().__init__(message)
        self.estimate = estimate
        self.abs_err_est = abs_err_est


class QuadratureError(ConvergenceError):
    """Raised when adaptive quadrature stops short of the requested tolerance."""
