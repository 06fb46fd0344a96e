"""Deterministic report documents.

One schema for both commands: tool identity, input digest, a scenario
echo that re-parses to the same Scenario, interval entries, and the audit
block when present.  Endpoints carry full precision (12 significant
digits) with a 2-decimal display string derived from it; rounded values
are never the primary ones.  Rendering the same input twice is
byte-identical.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from typing import Any

from ._version import __version__
from .audit import AuditReport
from .bounds import PcInterval
from .scenario import Scenario, scenario_to_dict

FULL_PRECISION_DIGITS = 12
DISPLAY_DECIMALS = 2


def full_precision(value: float) -> float:
    """Round to 12 significant digits; the report's canonical endpoint form."""
    return float(f"{value:.{FULL_PRECISION_DIGITS}g}")


def display(value: float) -> str:
    """Two-decimal display string."""
    return f"{value:.{DISPLAY_DECIMALS}f}"


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def interval_payload(interval: PcInterval) -> dict[str, Any]:
    return {
        "mode": interval.mode.value,
        "method": interval.method.value,
        "lower": full_precision(interval.lower),
        "upper": full_precision(interval.upper),
        "lower_display": display(interval.lower),
        "upper_display": display(interval.upper),
        "notes": list(interval.notes),
    }


def audit_payload(report: AuditReport) -> dict[str, Any]:
    entries = []
    for e in report.entries:
        if e.interval is not None:
            payload = interval_payload(e.interval)
            payload["error"] = None
        else:
            payload = {
                "mode": e.mode.value,
                "method": e.method.value,
                "lower": None,
                "upper": None,
                "lower_display": None,
                "upper_display": None,
                "notes": [],
                "error": e.error,
            }
        entries.append(payload)
    return {
        "methods": [m.value for m in report.methods],
        "entries": entries,
        "relations": [
            [None if r is None else r.value for r in row] for row in report.relations
        ],
        "headline_disagreement": report.headline_disagreement,
    }


def report_document(
    scenario: Scenario,
    input_digest: str,
    intervals: tuple[PcInterval, ...] = (),
    audit: AuditReport | None = None,
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "tool": "causabound",
        "version": __version__,
        "input": {"digest": input_digest, "scenario": scenario_to_dict(scenario)},
        "display": {
            "decimals": DISPLAY_DECIMALS,
            "full_precision_significant_digits": FULL_PRECISION_DIGITS,
        },
        "intervals": [interval_payload(iv) for iv in intervals],
    }
    if audit is not None:
        doc["audit"] = audit_payload(audit)
    return doc


def render_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_csv(doc: dict[str, Any]) -> str:
    """Interval entries as a flat table (the relation matrix stays JSON-only)."""
    rows = doc["audit"]["entries"] if "audit" in doc else doc["intervals"]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["mode", "method", "lower", "upper", "lower_display", "upper_display", "notes", "error"]
    )
    for row in rows:
        writer.writerow(
            [
                row["mode"],
                row["method"],
                "" if row["lower"] is None else f"{row['lower']:.{FULL_PRECISION_DIGITS}g}",
                "" if row["upper"] is None else f"{row['upper']:.{FULL_PRECISION_DIGITS}g}",
                row["lower_display"] or "",
                row["upper_display"] or "",
                "; ".join(row["notes"]),
                row.get("error") or "",
            ]
        )
    return out.getvalue()
