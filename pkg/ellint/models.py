from __future__ import annotations

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class PolyIndex(BaseModel):
    n: int = Field(ge=0, description="Polynomial degree")
    m: int = Field(ge=1, description="Superscript order of H_n^(m)")


class SeriesValue(BaseModel):
    """Result of a series evaluation together with its truncation diagnostics."""

    value: float
    terms_used: int = Field(ge=0)
    trunc_estimate: float = Field(ge=0.0)
    cancellation_flag: bool = False
    converged: bool = False
    max_term: float = Field(default=0.0, ge=0.0)


class QPolyParams(BaseModel):
    a: float
    b: float
    nu: float = Field(gt=0.0)
    m: int = Field(ge=1)


class QPolyCoeffs(BaseModel):
    n: int = Field(ge=0)
    coeffs: List[Tuple[int, float]] = Field(default_factory=list)

    def total(self) -> float:
        from .summation import CompensatedSum

        acc = CompensatedSum()
        for _, term in self.coeffs:
            acc.add(term)
        return acc.value


class GammaArgs2(BaseModel):
    """Arguments of Gamma(x1, xm | nu; m)."""

    x1: float
    xm: float
    nu: float
    m: float = 2.0


class GammaArgs3(BaseModel):
    """Arguments of Gamma(x1, x2, x3 | nu)."""

    x1: float
    x2: float
    x3: float
    nu: float


class Strategy(str, Enum):
    AUTO = "auto"
    SERIES = "series"
    QUADRATURE = "quadrature"


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    SERIES = "series"
    UMBRAL_SERIES = "umbral_series"
    QUADRATURE = "quadrature"
    LAPLACE_PEAK = "laplace_peak"


class IntegralKind(str, Enum):
    FULL_LINE_QUADRATIC = "full-quadratic"
    FULL_LINE_QUADRATIC_LINEAR = "full-quadratic-linear"
    HALF_LINE_MONOMIAL = "half-monomial"
    HALF_LINE_GENERAL = "half-general"
    HYPER_ELLIPTIC_3 = "hyper3"
    INCOMPLETE_FINITE = "incomplete"


class IntegralSpec(BaseModel):
    """One integral of the supported families; only the fields relevant to ``kind`` are read."""

    kind: IntegralKind
    a: Optional[float] = None
    b: Optional[float] = None
    a1: Optional[float] = None
    a2: Optional[float] = None
    a3: Optional[float] = None
    nu: Optional[float] = None
    m: Optional[float] = None
    upper: Optional[float] = None

    def inputs(self) -> dict:
        data = self.model_dump(mode="json")
        data["x"] = data.pop("upper")
        return data


class EvalReport(BaseModel):
    value: float
    abs_err_est: float = Field(ge=0.0)
    method: Method
    terms_used: int = 0
    converged: bool = True
    warnings: List[str] = Field(default_factory=list)


class QuadResult(BaseModel):
    value: float
    abs_err_est: float = Field(ge=0.0)
    evaluations: int = Field(ge=0)
    converged: bool
