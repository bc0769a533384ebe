"""
Report tools for the RSBF toolkit
Renders a command's result as JSON, CSV or a rich console table and writes it
to stdout or a file. Output depends only on the report content, so identical
invocations are byte-identical.
"""

import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "pretty")
PRETTY_WIDTH = 100


@dataclass
class Report:
    """
    One command result.

    Attributes:
        title: Panel title for pretty output
        data: JSON payload
        rows: Tabular view used for csv and pretty output
        header: Column names (omitted from csv when None)
        notes: Extra lines shown under the pretty table
    """

    title: str
    data: dict[str, Any]
    rows: list[list[Any]] = field(default_factory=list)
    header: Optional[list[str]] = None
    notes: list[str] = field(default_factory=list)


def render_json(report: Report) -> str:
    return json.dumps(report.data, indent=2) + "\n"


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if report.header:
        writer.writerow(report.header)
    writer.writerows(report.rows)
    return buffer.getvalue()


def _table_width(cells: list[list[str]]) -> int:
    """Columns at full cell width plus box borders, padding and the panel frame"""
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    return sum(widths) + 3 * len(widths) + 1 + 4


def render_pretty(report: Report) -> str:
    columns = report.header or [""] * (len(report.rows[0]) if report.rows else 1)
    cells = [list(columns)] + [[str(value) for value in row] for row in report.rows]
    buffer = io.StringIO()
    # cells are never truncated; wide tables widen the console
    console = Console(
        file=buffer,
        width=max(PRETTY_WIDTH, _table_width(cells), len(report.title) + 8),
        color_system=None,
        force_terminal=False,
        highlight=False,
    )
    table = Table(show_header=report.header is not None)
    for name in columns:
        table.add_column(name, justify="right", no_wrap=True)
    for row in cells[1:]:
        table.add_row(*row)
    console.print(Panel.fit(
        table if report.rows else "(empty)",
        title=f"[bold]{report.title}[/bold]",
    ))
    for note in report.notes:
        console.print(note)
    return buffer.getvalue()


def render(report: Report, fmt: str) -> str:
    """Render in one of json, csv, pretty"""
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    if fmt == "pretty":
        return render_pretty(report)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def write(text: str, out: Optional[str] = None) -> None:
    """Write to the given path, or stdout when out is None or '-'"""
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {path}")
