"""Structured (JSON lines) and tabular text reports."""

from __future__ import annotations

import json
from typing import Iterable

from .enumeration import CountReport
from .oracle import EquivalenceReport

SCHEMA = "paritydet.report/1"


def record(kind: str, **fields) -> dict:
    out = {"schema": SCHEMA, "kind": kind}
    out.update(fields)
    return out


def count_record(report: CountReport) -> dict:
    rec = report.as_record()
    kind = rec.pop("kind")
    return record("count/" + kind, **rec)


def equivalence_record(report: EquivalenceReport, **extra) -> dict:
    fields = {"mode": report.mode, "checked": report.checked, "passed": report.passed}
    if report.seed is not None:
        fields["seed"] = report.seed
    if report.counterexample is not None:
        fields["counterexample"] = {"u": [str(a) for a in report.counterexample.u],
                                    "v": [str(a) for a in report.counterexample.v]}
        fields["expected"] = report.expected
    fields.update(extra)
    return record("equivalence", **fields)


def to_jsonl(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def text_table(rows: list, columns: list | None = None) -> str:
    """Fixed-width table; ``rows`` are dicts, ``columns`` defaults to the first row's keys."""
    if not rows:
        return ""
    columns = columns or list(rows[0])

    def fmt(v):
        if isinstance(v, float):
            return f"{v:.4f}"
        return str(v)

    cells = [[fmt(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"
