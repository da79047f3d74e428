"""
Output records shared by the JSON-lines and CSV writers.

Floats are written with 17 significant digits so every finite double survives a write/read
cycle unchanged; non-finite values are written as null (JSON) or an empty cell (CSV).
"""
from __future__ import annotations

import csv
import json
import math
from typing import Any, Dict, List, Literal, Optional, TextIO

from pydantic import BaseModel, Field

Role = Literal["result", "oracle", "difference", "error"]
OutputFormat = Literal["json", "csv"]

TIMING_FIELD = "wall_time_microseconds"


class OutputRecord(BaseModel):
    kind: str
    a: Optional[float] = None
    b: Optional[float] = None
    a1: Optional[float] = None
    a2: Optional[float] = None
    a3: Optional[float] = None
    nu: Optional[float] = None
    m: Optional[float] = None
    x: Optional[float] = None
    role: Role = "result"
    value: Optional[float] = None
    abs_err_est: Optional[float] = None
    method: Optional[str] = None
    terms_used: Optional[int] = None
    converged: bool = False
    warnings: List[str] = Field(default_factory=list)
    abs_diff: Optional[float] = None
    rel_diff: Optional[float] = None
    tolerance: Optional[float] = None
    error: Optional[str] = None
    error_type: Optional[str] = None
    wall_time_microseconds: Optional[int] = None

    @classmethod
    def field_names(cls) -> List[str]:
        return list(cls.model_fields)

    def _items(self, include_timing: bool) -> List[tuple[str, Any]]:
        return [
            (name, getattr(self, name))
            for name in self.field_names()
            if include_timing or name != TIMING_FIELD
        ]

    def to_json_line(self, *, include_timing: bool = True) -> str:
        parts = [f"{json.dumps(name)}:{_json_value(value)}" for name, value in self._items(include_timing)]
        return "{" + ",".join(parts) + "}"

    def to_csv_row(self, *, include_timing: bool = True) -> List[str]:
        return [_csv_value(value) for _, value in self._items(include_timing)]

    @classmethod
    def from_json_line(cls, line: str) -> "OutputRecord":
        data: Dict[str, Any] = json.loads(line)
        return cls(**data)


def format_float(value: float) -> Optional[str]:
    if not math.isfinite(value):
        return None
    return "%.17g" % value


def _json_value(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        text = format_float(value)
        return text if text is not None else "null"
    return json.dumps(value)


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value) or ""
    if isinstance(value, list):
        return ";".join(str(item) for item in value)
    return str(value)


class RecordWriter:
    """Writes records to a text stream as JSON lines or CSV with a single header row."""

    def __init__(self, stream: TextIO, fmt: OutputFormat = "json", *, include_timing: bool = True):
        self._stream = stream
        self._fmt = fmt
        self._include_timing = include_timing
        self._csv = csv.writer(stream, lineterminator="\n") if fmt == "csv" else None
        self._header_written = False

    def write(self, record: OutputRecord) -> None:
        if self._csv is None:
            self._stream.write(record.to_json_line(include_timing=self._include_timing) + "\n")
            return
        if not self._header_written:
            names = OutputRecord.field_names()
            if not self._include_timing:
                names = [n for n in names if n != TIMING_FIELD]
            self._csv.writerow(names)
            self._header_written = True
        self._csv.writerow(record.to_csv_row(include_timing=self._include_timing))

    def write_all(self, records: List[OutputRecord]) -> None:
        for record in records:
            self.write(record)
        self._stream.flush()
