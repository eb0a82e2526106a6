"""Check records and the JSON report.

The canonical body (everything but timings) depends only on the run
configuration, so two runs with the same seed produce byte-identical bodies.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from .scalars import QRat, format_qrat

SCHEMA_VERSION = 1

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
POSITIVE, NEGATIVE = "positive", "negative"


def jsonable(x: Any) -> Any:
    """Convert check output (QRat, Fraction, tuples, numpy arrays) to plain JSON values."""
    if isinstance(x, QRat):
        return format_qrat(x)
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (str, float)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class Record:
    id: str
    anchor: str
    status: str
    expected: str = POSITIVE
    empirical: bool = False
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "expected": self.expected,
                "empirical": self.empirical, "details": jsonable(self.details)}


@dataclass
class Report:
    config: dict
    records: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def failed(self) -> list:
        return [r for r in self.records if r.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failed

    def body(self) -> dict:
        counts = {s: sum(r.status == s for r in self.records) for s in (PASS, FAIL, SKIPPED)}
        return {"schema_version": SCHEMA_VERSION, "config": jsonable(self.config),
                "records": [r.to_json() for r in self.records], "summary": counts}

    def canonical(self) -> str:
        return json.dumps(self.body(), sort_keys=True, indent=1)

    def dumps(self) -> str:
        out = self.body()
        out["timing_seconds"] = {k: round(v, 3) for k, v in self.timings.items()}
        return json.dumps(out, sort_keys=True, indent=1)

    def summary_lines(self) -> list[str]:
        lines = []
        for r in self.records:
            tag = r.status.upper()
            if r.expected == NEGATIVE and r.status == PASS:
                tag = "PASS (fails as expected)"
            if r.empirical:
                tag += " [empirical]"
            lines.append(f"{tag:<32} {r.id}  {r.anchor}")
        c = self.body()["summary"]
        lines.append(f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
        return lines

    # -- running checks -------------------------------------------------------
    def run(self, id: str, anchor: str, fn: Callable[[], dict], holds: Callable[[dict], bool] | None = None,
            expected: str = POSITIVE, empirical: bool = False) -> Record:
        """Run ``fn`` and record it.

        ``holds`` reads the claim off the returned dict (default: its
        ``passed`` key).  An expected-negative check passes when the claim
        does not hold.  Raised errors become failed records carrying the
        error type and message.
        """
        holds = holds or (lambda d: bool(d["passed"]))
        t0 = time.perf_counter()
        try:
            details = fn()
            ok = holds(details)
            status = PASS if ok == (expected == POSITIVE) else FAIL
        except Skip as s:
            details, status = {"reason": str(s)}, SKIPPED
        except (ArithmeticError, ValueError, KeyError) as e:
            details, status = {"error": type(e).__name__, "message": str(e)}, FAIL
        self.timings[id] = time.perf_counter() - t0
        rec = Record(id, anchor, status, expected, empirical, details)
        self.records.append(rec)
        return rec

    def skip(self, id: str, anchor: str, reason: str, expected: str = POSITIVE) -> Record:
        rec = Record(id, anchor, SKIPPED, expected, False, {"reason": reason})
        self.records.append(rec)
        return rec


class Skip(Exception):
    """Raised inside a check to mark it not applicable."""
