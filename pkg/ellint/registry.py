from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

from .config import NumericsSettings, resolve
from .exceptions import DomainError
from .integrals import (
    f_quadratic,
    f_quadratic_linear,
    incomplete_report,
    oracle_full_line,
    oracle_half_line,
    oracle_hyper3,
    oracle_incomplete,
    phi_general,
    phi_hyperelliptic3,
    phi_monomial,
)
from .models import EvalReport, IntegralKind, IntegralSpec, QPolyParams, Strategy

logger = logging.getLogger(__name__)

Evaluator = Callable[[IntegralSpec, float, Strategy, NumericsSettings], EvalReport]
Oracle = Callable[[IntegralSpec, float, NumericsSettings], EvalReport]


def _need(spec: IntegralSpec, name: str) -> float:
    value = getattr(spec, name)
    if value is None:
        raise DomainError(f"Kind '{spec.kind.value}' requires --{name if name != 'upper' else 'x'}", field=name)
    return float(value)


def _qpoly_params(spec: IntegralSpec) -> QPolyParams:
    m = _need(spec, "m")
    if not m.is_integer() or m < 1:
        raise DomainError(f"The incomplete integral needs an integer m >= 1, got {m}", field="m", value=m)
    nu = _need(spec, "nu")
    if not nu > 0.0:
        raise DomainError(f"nu must be positive, got {nu}", field="nu", value=nu)
    return QPolyParams(a=_need(spec, "a"), b=_need(spec, "b"), nu=nu, m=int(m))


def _closed_or_oracle(closed: Callable[[IntegralSpec], EvalReport], oracle: Oracle) -> Evaluator:
    def evaluate(spec: IntegralSpec, tol: float, strategy: Strategy, cfg: NumericsSettings) -> EvalReport:
        if strategy is Strategy.QUADRATURE:
            return oracle(spec, tol, cfg)
        return closed(spec)

    return evaluate


def _full_line_oracle(spec: IntegralSpec, tol: float, cfg: NumericsSettings) -> EvalReport:
    b = _need(spec, "b") if spec.kind is IntegralKind.FULL_LINE_QUADRATIC_LINEAR else 0.0
    return oracle_full_line(_need(spec, "a"), b, _need(spec, "nu"), tol, cfg)


def _half_line_oracle(spec: IntegralSpec, tol: float, cfg: NumericsSettings) -> EvalReport:
    b = _need(spec, "b") if spec.kind is IntegralKind.HALF_LINE_GENERAL else 0.0
    return oracle_half_line(_need(spec, "a"), b, _need(spec, "nu"), _need(spec, "m"), tol, cfg)


def _hyper3_oracle(spec: IntegralSpec, tol: float, cfg: NumericsSettings) -> EvalReport:
    return oracle_hyper3(_need(spec, "a1"), _need(spec, "a2"), _need(spec, "a3"), _need(spec, "nu"), tol, cfg)


def _incomplete_oracle(spec: IntegralSpec, tol: float, cfg: NumericsSettings) -> EvalReport:
    return oracle_incomplete(_qpoly_params(spec), _need(spec, "upper"), tol, cfg)


class IntegralRegistry:
    """Maps each integral kind to its primary evaluator and its quadrature oracle."""

    def __init__(self) -> None:
        self._entries: Dict[IntegralKind, Tuple[Evaluator, Oracle]] = {}

    def register(self, kind: IntegralKind, evaluator: Evaluator, oracle: Oracle) -> None:
        if kind in self._entries:
            raise ValueError(f"Kind '{kind.value}' already registered")
        self._entries[kind] = (evaluator, oracle)
        logger.debug("Registered integral kind '%s'", kind.value)

    def get(self, kind: IntegralKind) -> Tuple[Evaluator, Oracle]:
        try:
            return self._entries[kind]
        except KeyError as exc:
            raise KeyError(f"Kind '{kind.value}' not registered") from exc

    @property
    def kinds(self) -> list[IntegralKind]:
        return list(self._entries)

    def evaluate(
        self,
        spec: IntegralSpec,
        *,
        tol: Optional[float] = None,
        strategy: Strategy = Strategy.AUTO,
        settings: Optional[NumericsSettings] = None,
    ) -> EvalReport:
        cfg, tol = resolve(settings, tol)
        evaluator, _ = self.get(spec.kind)
        return evaluator(spec, tol, strategy, cfg)

    def oracle(
        self,
        spec: IntegralSpec,
        *,
        tol: Optional[float] = None,
        settings: Optional[NumericsSettings] = None,
    ) -> EvalReport:
        cfg, tol = resolve(settings, tol)
        _, oracle = self.get(spec.kind)
        return oracle(spec, tol, cfg)

    @classmethod
    def create_default(cls) -> "IntegralRegistry":
        registry = cls()
        registry.register(
            IntegralKind.FULL_LINE_QUADRATIC,
            _closed_or_oracle(lambda s: f_quadratic(_need(s, "a"), _need(s, "nu")), _full_line_oracle),
            _full_line_oracle,
        )
        registry.register(
            IntegralKind.FULL_LINE_QUADRATIC_LINEAR,
            _closed_or_oracle(
                lambda s: f_quadratic_linear(_need(s, "a"), _need(s, "b"), _need(s, "nu")),
                _full_line_oracle,
            ),
            _full_line_oracle,
        )
        registry.register(
            IntegralKind.HALF_LINE_MONOMIAL,
            _closed_or_oracle(lambda s: phi_monomial(_need(s, "a"), _need(s, "nu"), _need(s, "m")), _half_line_oracle),
            _half_line_oracle,
        )
        registry.register(
            IntegralKind.HALF_LINE_GENERAL,
            lambda s, tol, strategy, cfg: phi_general(
                _need(s, "a"), _need(s, "b"), _need(s, "nu"), _need(s, "m"), tol, strategy, cfg
            ),
            _half_line_oracle,
        )
        registry.register(
            IntegralKind.HYPER_ELLIPTIC_3,
            lambda s, tol, strategy, cfg: phi_hyperelliptic3(
                _need(s, "a1"), _need(s, "a2"), _need(s, "a3"), _need(s, "nu"), tol, strategy, cfg
            ),
            _hyper3_oracle,
        )
        registry.register(
            IntegralKind.INCOMPLETE_FINITE,
            lambda s, tol, strategy, cfg: incomplete_report(_qpoly_params(s), _need(s, "upper"), tol, strategy, cfg),
            _incomplete_oracle,
        )
        return registry


@lru_cache(maxsize=1)
def get_registry() -> IntegralRegistry:
    return IntegralRegistry.create_default()
