"""Report rendering: CSV, JSON and plain-text tables for solver results, theorem rows and sweeps."""

import csv
import io
import json

from domination.graph import Graph
from domination.solve import SolveResult
from domination.theorems import SWEEP_COLUMNS, SweepRow, TheoremReport, Verdict

REPORT_COLUMNS = ["theorem_id", "instance", "expected", "solver_value", "verdict", "millis", "witness"]


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def report_row(r: TheoremReport, timings: bool = False) -> list[str]:
    return [
        r.theorem.value,
        r.instance,
        r.expected,
        r.solver_label,
        r.verdict_label,
        str(r.millis) if timings else "",
        r.witness_label,
    ]


def report_json(r: TheoremReport, timings: bool = False) -> dict:
    return {
        "theorem_id": r.theorem.value,
        "instance": r.instance,
        "expected": r.expected,
        "solver_values": list(r.solver_values),
        "verdict": r.verdict.value,
        "reason": r.reason,
        "millis": r.millis if timings else None,
        "witnesses": [w.to_list() if w is not None else None for w in r.witnesses],
    }


def render_reports(reports: list[TheoremReport], fmt: str, timings: bool = False) -> str:
    if fmt == "csv":
        return _csv(REPORT_COLUMNS, [report_row(r, timings) for r in reports])
    if fmt == "json":
        return json.dumps([report_json(r, timings) for r in reports], indent=2) + "\n"
    return reports_table(reports, timings)


def reports_table(reports: list[TheoremReport], timings: bool = False) -> str:
    lines = [f"{'ID':<24}{'INSTANCE':<44}{'EXPECTED':<30}{'SOLVER':<10}{'VERDICT'}"]
    lines.append("─" * 120)
    for r in reports:
        millis = f"  {r.millis}ms" if timings else ""
        note = f"  {r.reason}" if r.reason and r.verdict is not Verdict.SKIPPED else ""
        lines.append(
            f"{r.theorem.value:<24}{r.instance:<44}{r.expected:<30}{r.solver_label:<10}{r.verdict_label}{millis}{note}"
        )
    lines.append("")
    lines.append(summary_line(reports))
    return "\n".join(lines) + "\n"


def summary_line(reports: list[TheoremReport]) -> str:
    counts = {v: 0 for v in Verdict}
    for r in reports:
        counts[r.verdict] += 1
    return f"{len(reports)} rows: " + ", ".join(f"{counts[v]} {v.value}" for v in Verdict)


def render_result(g: Graph, result: SolveResult, fmt: str, timings: bool = False) -> str:
    data = result.to_json()
    if not timings:
        data["millis"] = None
    if fmt == "json":
        return json.dumps(data) + "\n"
    if fmt == "csv":
        header = list(data)
        row = ["" if v is None else " ".join(map(str, v)) if isinstance(v, list) else str(v) for v in data.values()]
        return _csv(header, [row])
    witness = " ".join(map(str, data["witness"])) or "-"
    lines = [
        f"graph:   n={g.n} m={g.m}",
        f"{result.kind.symbol}: {result.value if result.value is not None else '-'} ({result.status.value})",
        f"witness: {witness}",
        f"nodes:   {result.nodes}",
    ]
    if timings:
        lines.append(f"time:    {result.millis}ms")
    return "\n".join(lines) + "\n"


def render_sweep(rows: list[SweepRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(SWEEP_COLUMNS, r.to_row())) for r in rows], indent=2) + "\n"
    return _csv(SWEEP_COLUMNS, [r.to_row() for r in rows])
