from __future__ import annotations

import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .exceptions import DomainError

TOL_ENV_VAR = "ELLINT_TOL"


class NumericsSettings(BaseModel):
    """Tolerances, caps and crossover thresholds shared by every evaluation path."""

    model_config = ConfigDict(frozen=True)

    tol: float = Field(default=1e-10, gt=0.0, description="Default relative tolerance")
    max_terms: int = Field(default=500, ge=1, description="Hard cap on series terms")
    hermite_max_degree: int = Field(
        default=300,
        ge=0,
        description="Largest Hermite or Q polynomial degree; the three-variable Gamma series also stops at this degree + 1 terms",
    )
    cancellation_ratio: float = Field(
        default=1e-6,
        gt=0.0,
        description="Flag cancellation when |sum| < ratio * max |term|",
    )
    fallback_ratio: float = Field(
        default=8.0,
        gt=0.0,
        description="Series-to-quadrature crossover for |x1| / xm**(1/m)",
    )
    quad_limit: int = Field(default=200, ge=10, description="QUADPACK subinterval limit")
    peak_step: float = Field(default=1e-4, gt=0.0, description="Relative step for f'' in the peak approximation")
    truncation_order: int = Field(default=16, ge=1, description="Default order of truncated power series")
    compare_rtol: float = Field(default=1e-8, gt=0.0, description="Declared tolerance of compare records")
    sweep_concurrency: int = Field(default=4, ge=1)

    @classmethod
    def from_env(cls) -> "NumericsSettings":
        """Construct settings, honouring the ELLINT_TOL override."""

        def _float(name: str, default: float) -> float:
            raw: Optional[str] = os.getenv(name)
            if raw is None:
                return default
            try:
                value = float(raw)
            except (TypeError, ValueError):
                return default
            return value if value > 0.0 else default

        return cls(tol=_float(TOL_ENV_VAR, 1e-10))

    def with_overrides(self, **updates: object) -> "NumericsSettings":
        """Return a copy with the non-None updates applied and re-validated."""
        data = self.model_dump()
        data.update({k: v for k, v in updates.items() if v is not None})
        return NumericsSettings(**data)


def load_settings() -> NumericsSettings:
    """Load numerics settings from environment variables."""
    return NumericsSettings.from_env()


@lru_cache(maxsize=1)
def get_settings() -> NumericsSettings:
    return load_settings()


def resolve(settings: Optional[NumericsSettings], tol: Optional[float] = None) -> tuple[NumericsSettings, float]:
    """Pick the effective settings and tolerance for one call."""
    cfg = settings or get_settings()
    effective = tol if tol is not None else cfg.tol
    if not effective > 0.0:
        raise DomainError(f"Tolerance must be positive, got {effective}", field="tol", value=effective)
    return cfg, effective
