import csv
import io
import sys

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from rich import box
from rich.console import Console
from rich.table import Table

from polylb import polylb_formulas as fm
from polylb.polylb_errors import DomainError
from polylb.polylb_fvector import FaceCountVector
from polylb.polylb_json import PolyLBJSON
from polylb.polylb_report import CheckReport

Header = List[str]
Rows = List[List[object]]

FORMATS = ("json", "csv", "md")

# Largest dimension a formula table may reach.
TABLE_D_MAX = 200


# Formula tables, in long form: one row per (parameters, k).


def _theta_table(lo: int, hi: int) -> Tuple[Header, Rows]:
    rows: Rows = []
    for d in range(max(lo, 2), hi + 1):
        for s in range(1, d + 1):
            rows += [[d, s, d + s, k, fm.theta(k, d + s, d)] for k in range(1, d)]
    return ["d", "s", "v", "k", "theta"], rows


def _eta_table(lo: int, hi: int) -> Tuple[Header, Rows]:
    rows: Rows = []
    for d in range(max(lo, 2), hi + 1):
        for s in range(2, d + 1):
            v = 2 * d + s - 1
            rows += [[d, s, v, k, fm.eta(k, v, d)] for k in range(1, d)]
    return ["d", "s", "v", "k", "eta"], rows


def _tau_table(lo: int, hi: int) -> Tuple[Header, Rows]:
    rows: Rows = []
    for d in range(max(lo, 4), hi + 1):
        for s in range(2, d - 1):
            rows += [[d, s, 2 * d + s - 1, k, fm.tau(k, d, s)] for k in range(1, d)]
    return ["d", "s", "v", "k", "tau"], rows


def _dichotomy_table(lo: int, hi: int) -> Tuple[Header, Rows]:
    rows: Rows = []
    for d in range(max(lo, 4), hi + 1):
        for k in range(1, d):
            eta, tau = fm.eta_raw(k, d, 3), fm.tau_intro(k, d)
            rows.append([d, k, eta, tau, tau - eta, "eta" if eta <= tau else "tau"])
    return ["d", "k", "eta", "tau", "gap", "lower"], rows


def _minimiser_table(lo: int, hi: int) -> Tuple[Header, Rows]:
    rows: Rows = []
    for d in range(max(lo, 4), hi + 1):
        for s in range(2, d - 1):
            a, m = fm.minimiser_type(d, s)
            rows.append([d, s, a, m, d + 1 + m * (a - m), 2 * d + s - 1])
    return ["d", "s", "a", "m", "f_0", "required f_0"], rows


TABLES: Dict[str, Callable[[int, int], Tuple[Header, Rows]]] = {
    "theta": _theta_table,
    "eta": _eta_table,
    "tau": _tau_table,
    "dichotomy": _dichotomy_table,
    "minimisers": _minimiser_table,
}


def formula_table(which: str, lo: int, hi: int) -> Tuple[Header, Rows]:
    if which not in TABLES:
        raise DomainError("unknown table", {"which": which})
    if not 1 <= lo <= hi <= TABLE_D_MAX:
        raise DomainError(f"need 1 <= A <= B <= {TABLE_D_MAX} in --d A..B", {"A": lo, "B": hi})
    return TABLES[which](lo, hi)


class PolyLBOutput:
    """Renders results as json, csv or markdown text.

    Data goes to stdout (or --out); the rich verdict table and other
    human-facing summaries go to the stderr console.
    """

    # Failures listed per report in markdown output.
    max_failures_shown = 20

    def __init__(self, fmt: str = "md", console: Optional[Console] = None) -> None:
        if fmt not in FORMATS:
            raise DomainError("unknown output format", {"format": fmt})
        self.format = fmt
        self.json = PolyLBJSON()
        self.console = console or Console(file=sys.stderr)

    def rows(self, header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
        if self.format == "json":
            return self.json.dumps(self.json.rows(header, rows))
        if self.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
            return buf.getvalue()
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
        return "\n".join(lines) + "\n"

    def fvector_result(
        self,
        family: str,
        formula: Optional[FaceCountVector],
        oracle: Optional[FaceCountVector],
        verdict: str,
    ) -> str:
        if self.format == "json":
            return self.json.dumps(
                {
                    "family": family,
                    "formula": self.json.fvector(formula),
                    "oracle": self.json.fvector(oracle),
                    "verdict": verdict,
                }
            )
        if self.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            for source, fvec in (("formula", formula), ("oracle", oracle)):
                if fvec is not None:
                    writer.writerow([family, source] + list(fvec.counts))
            writer.writerow([family, "verdict", verdict])
            return buf.getvalue()
        lines = [f"# {family}", "", "| source | f-vector |", "|---|---|"]
        for source, fvec in (("formula", formula), ("oracle", oracle)):
            lines.append(f"| {source} | {fvec if fvec is not None else '-'} |")
        lines += ["", f"verdict: {verdict}"]
        return "\n".join(lines) + "\n"

    def reports(self, reports: Sequence[CheckReport]) -> str:
        if self.format == "json":
            return self.json.dumps([self.json.report(r) for r in reports])
        if self.format == "csv":
            header = ["claim_id", "verdict", "points_checked", "failures", "equality_witnesses", "findings"]
            rows = [
                [r.claim_id, "PASS" if r.passed else "FAIL", r.points_checked,
                 len(r.failures), len(r.equality_witnesses), len(r.findings)]
                for r in reports
            ]
            return self.rows(header, rows)
        return "\n".join(self._report_markdown(r) for r in reports)

    def _report_markdown(self, report: CheckReport) -> str:
        grid = ", ".join(f"{k}={v}" for k, v in report.grid.items())
        lines = [
            f"## {report.claim_id}: {'PASS' if report.passed else 'FAIL'}",
            "",
            f"grid: {grid}",
            f"points checked: {report.points_checked}; failures: {len(report.failures)}; "
            f"equality witnesses: {len(report.equality_witnesses)}",
        ]
        if report.failures:
            lines += ["", "| params | expected | actual | kind |", "|---|---|---|---|"]
            for f in report.failures[: self.max_failures_shown]:
                params = ", ".join(f"{k}={v}" for k, v in f.params.items())
                lines.append(f"| {params} | {f.expected} | {f.actual} | {f.kind} |")
            hidden = len(report.failures) - self.max_failures_shown
            if hidden > 0:
                lines.append(f"\n... and {hidden} more")
        if report.findings:
            lines += ["", "findings:"] + [f"- {finding}" for finding in report.findings]
        return "\n".join(lines) + "\n"

    def verdict_table(self, reports: Sequence[CheckReport]) -> None:
        tbl = Table(box=box.MINIMAL_HEAVY_HEAD, title="[b]polylb verification[/b]")
        tbl.add_column("suite", style="bold")
        tbl.add_column("verdict")
        tbl.add_column("points", justify="right")
        tbl.add_column("failures", justify="right")
        tbl.add_column("witnesses", justify="right")
        tbl.add_column("findings", justify="right")
        for r in reports:
            verdict = "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]"
            tbl.add_row(
                r.claim_id,
                verdict,
                str(r.points_checked),
                str(len(r.failures)),
                str(len(r.equality_witnesses)),
                str(len(r.findings)),
            )
        self.console.print(tbl)

    @staticmethod
    def emit(text: str, out: Optional[str] = None) -> None:
        if out is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
