"""JSONL scan records and resumable record files."""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DIGIT_LIMIT = 500
KINDS = ("expand", "family", "nthroot", "conjecture", "analyze", "unit")
_INT64 = 1 << 63


def enc(value: Any) -> Any:
    """Make a value JSON-safe without losing exactness.

    Integers outside the signed 64-bit range become decimal strings, tuples
    become lists.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if -_INT64 <= value < _INT64 else str(value)
    if isinstance(value, (list, tuple)):
        return [enc(v) for v in value]
    if isinstance(value, dict):
        return {str(k): enc(v) for k, v in value.items()}
    if isinstance(value, (str, float)):
        return value
    return str(value)


@dataclass
class ScanRecord:
    kind: str
    params: dict
    status: str = ""
    l0: Optional[int] = None
    l1: Optional[int] = None
    steps_used: int = 0
    digits: list = field(default_factory=list)
    truncated: bool = False
    unit_coeffs: Optional[list] = None
    unit_norm: Optional[str] = None
    findings: list = field(default_factory=list)
    wall_ms: Optional[float] = None
    extra: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")

    def set_digits(self, digits: Iterable, limit: int = DIGIT_LIMIT) -> None:
        digits = [list(d) if isinstance(d, (list, tuple)) else d for d in digits]
        self.truncated = len(digits) > limit
        self.digits = enc(digits[:limit])

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "params": enc(self.params),
            "status": self.status,
            "l0": self.l0,
            "l1": self.l1,
            "steps_used": self.steps_used,
            "digits": enc(self.digits),
            "truncated": self.truncated,
            "unit_coeffs": enc(self.unit_coeffs),
            "unit_norm": self.unit_norm,
            "findings": list(self.findings),
            "wall_ms": self.wall_ms,
            "extra": enc(self.extra),
        }

    def format(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRecord":
        known = {k: d[k] for k in cls.__dataclass_fields__ if k in d}
        return cls(**known)

    @classmethod
    def parse(cls, line: str) -> "ScanRecord":
        return cls.from_dict(json.loads(line))

    @staticmethod
    def params_key(params: dict) -> str:
        return json.dumps(enc(params), sort_keys=True, separators=(",", ":"))

    @property
    def key(self) -> str:
        return self.params_key(self.params)


def read_records(path: str, repair: bool = False) -> list[ScanRecord]:
    """Read a JSONL file, skipping corrupt lines with a logged warning.

    With ``repair=True`` an unterminated final line (an interrupted write) is
    cut off the file so that appending can resume cleanly.
    """
    if not os.path.exists(path):
        return []
    with open(path, "rb") as fh:
        data = fh.read()
    if data and not data.endswith(b"\n"):
        cut = data.rfind(b"\n") + 1
        log.warning("%s: dropping partial final line (%d bytes)", path, len(data) - cut)
        data = data[:cut]
        if repair:
            with open(path, "r+b") as fh:
                fh.truncate(cut)
    records = []
    for lineno, raw in enumerate(data.decode("utf-8", errors="replace").splitlines(), 1):
        if not raw.strip():
            continue
        try:
            records.append(ScanRecord.parse(raw))
        except (ValueError, TypeError, KeyError) as exc:
            log.warning("%s:%d: skipping corrupt record (%s)", path, lineno, exc)
    return records


class RecordWriter:
    """Append-only JSONL writer; each record is flushed as one full line."""

    def __init__(self, path: Optional[str], resume: bool = False):
        self.path = path
        self.done: set[str] = set()
        if path and resume:
            self.done = {r.key for r in read_records(path, repair=True)}
        self._fh = None
        if path:
            mode = "a" if resume else "w"
            self._fh = open(path, mode, encoding="utf-8")

    def write(self, rec: ScanRecord) -> None:
        if self._fh is None:
            return
        self._fh.write(rec.format() + "\n")
        self._fh.flush()
        self.done.add(rec.key)

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
