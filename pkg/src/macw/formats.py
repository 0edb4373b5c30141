"""JSON and CSV serialization for instances, graphs, solutions and gap reports.

Numbers are written as JSON integers when integral and as ``"p/q"`` strings
otherwise; floats never appear in output.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .core import (
    Instance,
    ParseError,
    Solution,
    WeightGraph,
    rational_matrix,
    load_json,
    render,
)
from .explore import GapReport


def number(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else render(x)


def matrix(m) -> list[list[int | str]]:
    return [[number(x) for x in row] for row in m]


def parse_graph(text: str) -> WeightGraph:
    """Parse ``{"weights": [[...]]}``."""
    doc = load_json(text)
    if not isinstance(doc, dict) or "weights" not in doc:
        raise ParseError('graph JSON must be an object with a "weights" key')
    return WeightGraph(rational_matrix(doc["weights"], "weights"))


def dump_graph(g: WeightGraph) -> str:
    return json.dumps({"weights": matrix(g.weights)}) + "\n"


def dump_problem(inst: Instance, offset: WeightGraph | None = None) -> str:
    doc: dict[str, Any] = {"values": matrix(inst.values)}
    if offset is not None:
        doc["offset"] = matrix(offset.weights)
    return json.dumps(doc) + "\n"


def solution_dict(sol: Solution) -> dict[str, Any]:
    out = {
        "allocation": list(sol.allocation.assignment),
        "allocation_label": sol.allocation.label(),
        "macw": render(sol.macw),
        "witness": list(sol.witness.nodes),
        "witness_label": sol.witness.label(),
        "witness_total": render(sol.witness.total_weight),
        "total_value": render(sol.total_value),
        "method": sol.method,
        "optimal": sol.optimal,
    }
    if sol.info:
        out["info"] = {k: render(v) if isinstance(v, Fraction) else v for k, v in sol.info.items()}
    return out


def solution_text(sol: Solution) -> str:
    lines = [
        f"allocation: {sol.allocation.label()}",
        f"macw: {render(sol.macw)}",
        f"witness: {sol.witness.label()} total {render(sol.witness.total_weight)}",
        f"total value: {render(sol.total_value)}",
        f"method: {sol.method}{' (optimal)' if sol.optimal else ''}",
    ]
    return "\n".join(lines) + "\n"


REPORT_FIELDS = [
    "index", "n", "exact_macw", "best_matching_macw", "gap",
    "exact_allocation", "values", "offset",
]


def report_dict(r: GapReport) -> dict[str, Any]:
    return {
        "index": r.index,
        "n": r.instance.n,
        "exact_macw": render(r.exact_macw),
        "best_matching_macw": render(r.best_matching_macw),
        "gap": render(r.gap),
        "exact_allocation": list(r.exact_allocation.assignment),
        "values": matrix(r.instance.values),
        "offset": matrix(r.offset.weights),
    }


def reports_csv(reports: list[GapReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = report_dict(r)
        for key in ("exact_allocation", "values", "offset"):
            row[key] = json.dumps(row[key], separators=(",", ":"))
        writer.writerow(row)
    return buf.getvalue()


def reports_json(reports: list[GapReport], summary: dict | None = None) -> str:
    doc: dict[str, Any] = {"reports": [report_dict(r) for r in reports]}
    if summary is not None:
        doc["summary"] = {k: render(v) if isinstance(v, Fraction) else v for k, v in summary.items()}
    return json.dumps(doc, indent=2) + "\n"
