"""Serialization of classification records and replay checks.

Output is deterministic: records keep their lexicographic order, witnesses
keep insertion order, and exact rationals render as ``"p/q"`` strings.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from fractions import Fraction
from itertools import groupby
from typing import Sequence

from .classifier import ClassificationRecord
from .errors import ContractError
from .filters import FilterVerdict
from .replay import PaperCheck


def render_value(v: Fraction | str) -> str:
    # Fraction renders as "p/q" (or "p" when integral)
    return str(v)


def verdict_to_dict(v: FilterVerdict) -> dict:
    return {
        "filter_id": v.filter_id,
        "status": v.status.value,
        "reason": v.reason,
        "witnesses": {k: render_value(w) for k, w in v.witnesses.items()},
    }


def record_to_dict(r: ClassificationRecord) -> dict:
    return {
        "n": r.n,
        "c1": r.c1,
        "c2": r.c2,
        "branch": r.branch.value,
        "outcome": r.outcome.value,
        "verdicts": [verdict_to_dict(v) for v in r.verdicts],
        "citations": list(r.citations),
    }


def check_to_dict(c: PaperCheck) -> dict:
    return {
        "claim_id": c.claim_id,
        "location": c.location,
        "paper_value": c.paper_value,
        "recomputed_value": render_value(c.recomputed_value),
        "status": c.status.value,
        "conclusion": c.conclusion,
    }


def _cell(text) -> str:
    return str(text).replace("|", "\\|")


def _witness_text(v: FilterVerdict) -> str:
    return "; ".join(f"{k}={render_value(w)}" for k, w in v.witnesses.items())


def _records_csv(records: Sequence[ClassificationRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "c1", "c2", "branch", "outcome", "verdicts", "witnesses", "citations"])
    for r in records:
        w.writerow([
            r.n, r.c1, r.c2, r.branch.value, r.outcome.value,
            ";".join(f"{v.filter_id}:{v.status.value}" for v in r.verdicts),
            ";".join(f"{v.filter_id}.{k}={render_value(x)}" for v in r.verdicts for k, x in v.witnesses.items()),
            ";".join(r.citations),
        ])
    return buf.getvalue()


def _records_markdown(records: Sequence[ClassificationRecord]) -> str:
    lines: list[str] = []
    for n, group in groupby(records, key=lambda r: r.n):
        lines += [f"## Q^{n}", "", "| c1 | c2 | branch | outcome | deciding filter | witnesses |", "|---|---|---|---|---|---|"]
        for r in group:
            # filters run until one decides, so the last verdict is the deciding one
            v = r.verdicts[-1]
            cells = (r.c1, r.c2, r.branch.value, r.outcome.value, v.filter_id, _witness_text(v))
            lines.append("| " + " | ".join(_cell(c) for c in cells) + " |")
        lines.append("")
    return "\n".join(lines)


def _checks_csv(checks: Sequence[PaperCheck]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim_id", "location", "paper_value", "recomputed_value", "status", "conclusion"])
    for c in checks:
        d = check_to_dict(c)
        w.writerow([d[k] for k in ("claim_id", "location", "paper_value", "recomputed_value", "status", "conclusion")])
    return buf.getvalue()


def _checks_markdown(checks: Sequence[PaperCheck]) -> str:
    lines = ["| claim | location | printed | recomputed | status | conclusion |", "|---|---|---|---|---|---|"]
    for c in checks:
        d = check_to_dict(c)
        lines.append("| " + " | ".join(_cell(d[k]) for k in ("claim_id", "location", "paper_value", "recomputed_value", "status", "conclusion")) + " |")
    return "\n".join(lines) + "\n"


def emit_report(
    records: Sequence[ClassificationRecord] | None = None,
    checks: Sequence[PaperCheck] | None = None,
    format: str = "json",
) -> str:
    """Render records, checks, or both.

    An empty record list is allowed (with a warning); an explicitly empty check
    list is a contract error since a replay always produces checks.
    """
    if format not in ("json", "csv", "markdown"):
        raise ContractError(f"unknown format {format!r}")
    if checks is not None and len(checks) == 0:
        raise ContractError("verify-paper produced no checks")
    if records is not None and len(records) == 0:
        warnings.warn("classification produced no records", stacklevel=2)
    if records is None and checks is None:
        raise ContractError("nothing to report")

    if format == "json":
        if records is not None and checks is not None:
            payload = {"records": [record_to_dict(r) for r in records], "checks": [check_to_dict(c) for c in checks]}
        elif records is not None:
            payload = [record_to_dict(r) for r in records]
        else:
            payload = [check_to_dict(c) for c in checks]
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    parts = []
    if records is not None:
        parts.append(_records_csv(records) if format == "csv" else _records_markdown(records))
    if checks is not None:
        parts.append(_checks_csv(checks) if format == "csv" else _checks_markdown(checks))
    return "\n".join(parts)
