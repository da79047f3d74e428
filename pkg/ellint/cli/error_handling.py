"""
Error handling for the command-line front end.
Maps library exceptions to structured error records.
"""
from __future__ import annotations

import logging
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from ..exceptions import ConvergenceError, DegreeRangeError, DomainError, EllintError
from .records import OutputRecord

logger = logging.getLogger(__name__)


def classify_error(exc: BaseException) -> str:
    if isinstance(exc, DomainError):
        return "domain_error"
    if isinstance(exc, DegreeRangeError):
        return "range_error"
    if isinstance(exc, ConvergenceError):
        return "convergence_error"
    if isinstance(exc, ValidationError):
        return "validation_error"
    return "internal_error"


def _details(exc: BaseException) -> List[str]:
    details = []
    if isinstance(exc, DomainError) and exc.field is not None:
        details.append(f"field={exc.field}")
    if isinstance(exc, ConvergenceError) and exc.estimate is not None:
        details.append(f"estimate={exc.estimate!r}")
    if isinstance(exc, ValidationError):
        for err in exc.errors():
            loc = ".".join(str(part) for part in err.get("loc", ()))
            details.append(f"{loc}: {err.get('msg')}")
    return details


def _as_float(value: Any) -> Optional[float]:
    """Echo numeric inputs; ranged or malformed text is dropped from the record."""
    try:
        return float(value) if value is not None else None
    except (TypeError, ValueError):
        return None


def create_error_record(
    inputs: Dict[str, Any],
    exc: BaseException,
    *,
    elapsed_us: Optional[int] = None,
) -> OutputRecord:
    """Build an error record echoing the inputs of the failed evaluation."""
    error_type = classify_error(exc)
    message = str(exc) if error_type != "internal_error" else f"Unexpected {type(exc).__name__}: {exc}"
    data = {name: _as_float(inputs.get(name)) for name in ("a", "b", "a1", "a2", "a3", "nu", "m", "x")}
    return OutputRecord(
        kind=str(inputs.get("kind", "")),
        **data,
        role="error",
        converged=False,
        warnings=_details(exc),
        error=message,
        error_type=error_type,
        wall_time_microseconds=elapsed_us,
    )


def with_error_handling(
    inputs: Dict[str, Any],
    action: Callable[[], List[OutputRecord]],
    *,
    clock: Optional[Callable[[], int]] = None,
) -> tuple[List[OutputRecord], List[OutputRecord]]:
    """Run ``action``; return ``(records, [])`` on success or ``([], [error_record])`` on failure."""
    start = clock() if clock else None
    try:
        return action(), []
    except (EllintError, ValidationError) as exc:
        logger.error("Evaluation of %s failed: %s", inputs.get("kind"), exc)
        return [], [create_error_record(inputs, exc, elapsed_us=_elapsed(clock, start))]
    except Exception as exc:
        logger.exception("Unhandled exception while evaluating %s", inputs.get("kind"))
        return [], [create_error_record(inputs, exc, elapsed_us=_elapsed(clock, start))]


def _elapsed(clock: Optional[Callable[[], int]], start: Optional[int]) -> Optional[int]:
    if clock is None or start is None:
        return None
    return clock() - start
