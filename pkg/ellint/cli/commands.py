from __future__ import annotations

import itertools
import logging
import math
import time
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from ..config import NumericsSettings, get_settings
from ..exceptions import DomainError
from ..models import EvalReport, IntegralSpec, Strategy
from ..registry import IntegralRegistry, get_registry
from .error_handling import create_error_record, with_error_handling
from .records import OutputRecord, Role
from .sweep import run_sweep_sync

logger = logging.getLogger(__name__)

PARAM_ORDER = ("a", "b", "a1", "a2", "a3", "nu", "m", "x")


class CommandResult(BaseModel):
    records: List[OutputRecord] = Field(default_factory=list)
    errors: List[OutputRecord] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.errors or not all(record.converged for record in self.records):
            return 1
        return 0

    def extend(self, other: "CommandResult") -> None:
        self.records.extend(other.records)
        self.errors.extend(other.errors)


def _now_us() -> int:
    return time.perf_counter_ns() // 1000


def build_spec(params: Dict[str, Any]) -> IntegralSpec:
    """IntegralSpec from CLI-style parameters, where the upper limit is called ``x``."""
    data = {key: value for key, value in params.items() if key != "x"}
    data["upper"] = params.get("x")
    return IntegralSpec(**data)


def _record(spec: IntegralSpec, report: EvalReport, role: Role, elapsed_us: int) -> OutputRecord:
    return OutputRecord(
        **spec.inputs(),
        role=role,
        value=report.value,
        abs_err_est=report.abs_err_est,
        method=report.method.value,
        terms_used=report.terms_used,
        converged=report.converged,
        warnings=report.warnings,
        wall_time_microseconds=elapsed_us,
    )


def _difference(spec: IntegralSpec, primary: EvalReport, oracle: EvalReport, tolerance: float) -> OutputRecord:
    abs_diff = abs(primary.value - oracle.value)
    if oracle.value != 0.0:
        rel_diff = abs_diff / abs(oracle.value)
    else:
        rel_diff = 0.0 if abs_diff == 0.0 else math.inf
    return OutputRecord(
        **spec.inputs(),
        role="difference",
        converged=rel_diff <= tolerance,
        abs_diff=abs_diff,
        rel_diff=rel_diff,
        tolerance=tolerance,
    )


def cmd_eval(
    params: Dict[str, Any],
    *,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
    registry: Optional[IntegralRegistry] = None,
) -> CommandResult:
    """Evaluate one integral through its primary path."""
    cfg = settings or get_settings()
    reg = registry or get_registry()

    def action() -> List[OutputRecord]:
        spec = build_spec(params)
        start = _now_us()
        report = reg.evaluate(spec, tol=tol, strategy=strategy, settings=cfg)
        return [_record(spec, report, "result", _now_us() - start)]

    records, errors = with_error_handling(params, action, clock=_now_us)
    return CommandResult(records=records, errors=errors)


def cmd_compare(
    params: Dict[str, Any],
    *,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
    registry: Optional[IntegralRegistry] = None,
) -> CommandResult:
    """Primary path, quadrature oracle, and their difference."""
    cfg = settings or get_settings()
    reg = registry or get_registry()

    def action() -> List[OutputRecord]:
        spec = build_spec(params)
        start = _now_us()
        primary = reg.evaluate(spec, tol=tol, strategy=strategy, settings=cfg)
        middle = _now_us()
        oracle = reg.oracle(spec, tol=tol, settings=cfg)
        end = _now_us()
        return [
            _record(spec, primary, "result", middle - start),
            _record(spec, oracle, "oracle", end - middle),
            _difference(spec, primary, oracle, cfg.compare_rtol),
        ]

    records, errors = with_error_handling(params, action, clock=_now_us)
    return CommandResult(records=records, errors=errors)


def parse_range(name: str, text: Optional[str]) -> List[Optional[float]]:
    """``lo:hi:count`` with inclusive endpoints, or a single number."""
    if text is None:
        return [None]
    try:
        if ":" not in text:
            return [float(text)]
        lo_text, hi_text, count_text = text.split(":")
        lo, hi, count = float(lo_text), float(hi_text), int(count_text)
    except ValueError as exc:
        raise DomainError(f"Cannot parse --{name} value '{text}' as a number or lo:hi:count", field=name, value=text) from exc
    if count < 1:
        raise DomainError(f"Range count for --{name} must be at least 1, got {count}", field=name, value=text)
    if count == 1:
        return [lo]
    return [float(v) for v in np.linspace(lo, hi, count)]


def expand_grid(template: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Cartesian product of the ranged parameters, lexicographic in PARAM_ORDER."""
    axes = [parse_range(name, template.get(name)) for name in PARAM_ORDER]
    return [
        {"kind": template["kind"], **dict(zip(PARAM_ORDER, point))}
        for point in itertools.product(*axes)
    ]


def cmd_table(
    template: Dict[str, Any],
    *,
    tol: Optional[float] = None,
    strategy: Strategy = Strategy.AUTO,
    settings: Optional[NumericsSettings] = None,
    registry: Optional[IntegralRegistry] = None,
) -> CommandResult:
    """One evaluation per grid point; rows fail independently."""
    cfg = settings or get_settings()
    reg = registry or get_registry()
    try:
        grid = expand_grid(template)
    except DomainError as exc:
        logger.error("Invalid table grid: %s", exc)
        return CommandResult(errors=[create_error_record(template, exc)])

    rows = run_sweep_sync(
        grid,
        lambda params: cmd_eval(params, tol=tol, strategy=strategy, settings=cfg, registry=reg),
        cfg.sweep_concurrency,
    )
    result = CommandResult()
    for row in rows:
        result.extend(row)
    return result
