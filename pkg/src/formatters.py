"""Output formatters for reports, verdicts, tables and traces."""

from typing import Iterable, List

from .enumeration import nos_bound
from .models import CheckResult, ConstructionReport, RecursionTrace, VerificationVerdict


def format_report(report: ConstructionReport) -> str:
    """`method period weight bound gap`, plus the deletion and lower-bound notes for lifts."""
    line = report.summary_line()
    if report.guaranteed_period is not None:
        line += f" guaranteed>={report.guaranteed_period}"
    if report.deleted:
        line += " deleted=" + ",".join(str(i) for i in report.deleted)
    return line


def format_verdict(verdict: VerificationVerdict) -> str:
    name = verdict.kind.value
    if verdict.holds:
        return f"{name} holds"
    witness = verdict.witness
    text = f"{name} fails witness=({witness[0]}, {witness[1]})" if witness else f"{name} fails"
    if verdict.detail:
        text += f": {verdict.detail}"
    return text


def format_bound_table(max_q: int, max_n: int) -> str:
    """
    Grid of negative orientable period bounds, one row per order n and one column per q.

    Args:
        max_q: Largest alphabet size (columns start at q=2)
        max_n: Largest order (rows start at n=2)
    """
    sizes = range(2, max_q + 1)
    rows = [[str(nos_bound(q, n)) for q in sizes] for n in range(2, max_n + 1)]
    width = max([len(str(q)) for q in sizes] + [len(cell) for row in rows for cell in row])

    output = []
    output.append("n\\q " + " ".join(str(q).rjust(width) for q in sizes))
    for n, row in zip(range(2, max_n + 1), rows):
        output.append(f"{n:<3} " + " ".join(cell.rjust(width) for cell in row))
    return "\n".join(output)


def format_trace(trace: RecursionTrace) -> str:
    return "\n".join(step.row() for step in trace.steps)


def format_count_rows(rows: Iterable[tuple[str, int]]) -> str:
    """One `weight count` line per weight class."""
    return "\n".join(f"{weight} {count}" for weight, count in rows)


def format_checks(results: List[CheckResult]) -> str:
    output = [r.line() for r in results]
    passed = sum(1 for r in results if r.passed)
    output.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(output)
