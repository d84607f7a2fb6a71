"""Verification reports."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, List, Tuple

SCHEMA = "seqlab.report/1"
MAX_COUNTEREXAMPLES = 10


@dataclass
class Report:
    """Outcome of checking one claim over a finite range.

    ``status`` is ``"fail"`` exactly when counterexamples were recorded.
    Only the first ``cap`` counterexamples are kept; ``failures`` counts
    all of them.
    """

    claim_id: str
    range: str
    status: str = "pass"
    counterexamples: List[Tuple[str, Any, Any]] = field(default_factory=list)
    elapsed_ms: int = 0
    notes: List[str] = field(default_factory=list)
    failures: int = 0
    cap: int = MAX_COUNTEREXAMPLES

    def check(self, ok: bool, where, expected, actual) -> bool:
        if not ok:
            self.fail(where, expected, actual)
        return ok

    def fail(self, where, expected, actual) -> None:
        self.failures += 1
        self.status = "fail"
        if len(self.counterexamples) < self.cap:
            self.counterexamples.append((str(where), expected, actual))

    def skip(self, reason: str) -> None:
        self.status = "skipped"
        self.notes.append(reason)

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "claim_id": self.claim_id,
            "range": self.range,
            "status": self.status,
            "counterexamples": [
                {"input": w, "expected": _jsonable(e), "actual": _jsonable(a)}
                for w, e, a in self.counterexamples
            ],
            "failures": self.failures,
            "notes": list(self.notes),
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _jsonable(v):
    # big ints are kept exact as decimal strings once they leave the int53 range
    if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, int):
        return v if abs(v) < 2**53 else str(v)
    if hasattr(v, "item"):
        return _jsonable(v.item())
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [_jsonable(x) for x in items]
    return str(v)
