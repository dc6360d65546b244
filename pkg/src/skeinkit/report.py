"""Per-computation reports and their text/JSON/CSV renderings.

A report never carries a polynomial from an aborted (budget-exceeded)
computation: aborted inputs surface as SKIP checks with no polynomial.
Reports are deterministic apart from the ``ms`` timing field;
``content_key`` strips it for byte-identity comparisons across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Check", "InvariantReport", "reports_to_json", "reports_to_csv"]

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass
class Check:
    id: str
    expected: str
    got: str
    status: str
    note: str = ""

    def to_dict(self) -> dict:
        d = {"id": self.id, "expected": self.expected, "got": self.got, "status": self.status}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class InvariantReport:
    input: str
    engine: str
    polynomial: object = None  # LaurentPoly2 or None
    max_z: int | None = None
    morton: int | None = None
    checks: list = field(default_factory=list)
    ms: int = 0

    def check(self, check_id: str, expected, got, note: str = "") -> Check:
        status = PASS if expected == got else FAIL
        c = Check(check_id, str(expected), str(got), status, note)
        self.checks.append(c)
        return c

    def skip(self, check_id: str, reason: str) -> Check:
        c = Check(check_id, "", "", SKIP, reason)
        self.checks.append(c)
        return c

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.status == SKIP for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "input": self.input,
            "engine": self.engine,
            "polynomial": self.polynomial.to_json_terms() if self.polynomial is not None else None,
            "max_z": self.max_z,
            "morton": self.morton,
            "checks": [c.to_dict() for c in self.checks],
            "ms": self.ms,
        }

    def content_key(self) -> str:
        d = self.to_json_dict()
        d.pop("ms")
        return json.dumps(d, sort_keys=True)

    def text_lines(self) -> list:
        lines = [f"input: {self.input}  [engine: {self.engine}]"]
        if self.polynomial is not None:
            lines.append(f"  P = {self.polynomial.format_text()}")
            lines.append(f"  max_z = {self.max_z}   morton_bound = {self.morton}")
        for c in self.checks:
            mark = {PASS: "ok  ", FAIL: "FAIL", SKIP: "skip"}[c.status]
            detail = f" expected {c.expected} got {c.got}" if c.status == FAIL else ""
            note = f"  ({c.note})" if c.note else ""
            lines.append(f"  [{mark}] {c.id}{detail}{note}")
        return lines


def reports_to_json(reports: list) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2, sort_keys=True)


def reports_to_csv(reports: list) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["input", "engine", "max_z", "morton", "check_id", "expected", "got", "status", "note", "ms"]
    )
    for r in reports:
        if not r.checks:
            writer.writerow([r.input, r.engine, r.max_z, r.morton, "", "", "", "", "", r.ms])
        for c in r.checks:
            writer.writerow(
                [r.input, r.engine, r.max_z, r.morton, c.id, c.expected, c.got, c.status, c.note, r.ms]
            )
    return buf.getvalue()
