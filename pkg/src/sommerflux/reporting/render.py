"""Render reports as an aligned table, CSV or JSON.

``--digits`` applies to table and CSV output only; JSON carries full precision so a parsed report
reproduces every derived column exactly.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from rich.console import Console
from rich.table import Table

from sommerflux.config import OutputFormat
from sommerflux.models.report import Report

CSV_COLUMNS = (
    "section",
    "label",
    "quantity",
    "value",
    "unit",
    "reference",
    "ratio",
    "tolerance",
    "passed",
    "error",
)

_TABLE_WIDTH = 160


def _num(value: float | None, digits: int) -> str:
    if value is None:
        return ""
    return f"{value:.{digits}g}"


def _table(report: Report, digits: int) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=_TABLE_WIDTH, no_color=True, force_terminal=False)

    console.print(f"command: {report.command}")
    for key, value in report.inputs.items():
        console.print(f"  {key} = {value}")

    if report.rows:
        table = Table(title="Results", title_justify="left")
        for column in ("label", "quantity", "value", "unit", "error"):
            table.add_column(column, justify="right" if column == "value" else "left")
        for row in report.rows:
            table.add_row(
                row.label, row.quantity, _num(row.value, digits), row.unit, row.error or ""
            )
        console.print(table)

    if report.comparisons:
        table = Table(title="Model vs reference", title_justify="left")
        for column in ("label", "model", "reference", "unit", "ratio", "ratio kind"):
            table.add_column(column)
        for comp in report.comparisons:
            ratio = _num(comp.ratio, digits) if comp.ratio is not None else "undefined"
            table.add_row(
                comp.label,
                _num(comp.model, digits),
                _num(comp.reference, digits),
                comp.unit,
                ratio,
                comp.ratio_kind,
            )
        console.print(table)

    if report.diagnostics:
        table = Table(title="Diagnostics", title_justify="left")
        for column in ("suite", "case", "residual", "tolerance", "status"):
            table.add_column(column)
        for diag in report.diagnostics:
            residual = _num(diag.residual, 3) if diag.residual is not None else "n/a"
            status = "ok" if diag.passed else f"FAIL {diag.note or ''}".rstrip()
            table.add_row(diag.suite, diag.case, residual, f"{diag.tolerance:.3g}", status)
        console.print(table)

    console.print(f"exit code: {report.exit_code}")
    return buffer.getvalue()


def _csv(report: Report, digits: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        value = _num(row.value, digits)
        writer.writerow(
            ["row", row.label, row.quantity, value, row.unit, "", "", "", "", row.error or ""]
        )
    for comp in report.comparisons:
        writer.writerow(
            [
                "comparison",
                comp.label,
                comp.ratio_kind,
                _num(comp.model, digits),
                comp.unit,
                _num(comp.reference, digits),
                _num(comp.ratio, digits),
                "",
                "",
                "",
            ]
        )
    for diag in report.diagnostics:
        writer.writerow(
            [
                "diagnostic",
                f"{diag.suite}: {diag.case}",
                "residual",
                _num(diag.residual, digits),
                "1",
                "",
                "",
                f"{diag.tolerance:.3g}",
                str(diag.passed).lower(),
                diag.note or "",
            ]
        )
    return buffer.getvalue()


def render_report(report: Report, fmt: OutputFormat = "table", digits: int = 10) -> str:
    """Render ``report`` in the requested format.

    Args:
        report: Report to render.
        fmt: ``table``, ``csv`` or ``json``.
        digits: Significant digits for table and CSV numbers.

    Returns:
        The rendered text.
    """

    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if fmt == "csv":
        return _csv(report, digits)
    if fmt == "table":
        return _table(report, digits)
    raise ValueError(f"unsupported output format {fmt!r}")


def write_report(
    report: Report, path: Path, fmt: OutputFormat = "table", digits: int = 10
) -> Path:
    """Render ``report`` into ``path``."""

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_report(report, fmt, digits), encoding="utf-8")
    return path


def load_report(text: str | Path) -> Report:
    """Parse a JSON report; derived columns are recomputed."""

    raw = text.read_text(encoding="utf-8") if isinstance(text, Path) else text
    return Report.model_validate_json(raw)
