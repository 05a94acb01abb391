"""relcorr Output

CSV and JSON data writers (stdout or --out) and rich summary tables, which
always go to stderr so stdout carries data only.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

from rich.console import Console
from rich.table import Table

from .manifest import RunManifest


console = Console(stderr=True)


def format_number(value: Optional[float], spec: str = ".15g") -> str:
    """Locale-free number cell; negative zero prints as zero, None as empty."""
    if value is None:
        return ""
    text = format(float(value), spec)
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def format_flag(flag: bool) -> str:
    return "true" if flag else "false"


def csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def json_text(manifest: RunManifest, results: Any) -> str:
    document = {"manifest": manifest.to_dict(), "results": results}
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def write_output(text: str, out: Optional[Path] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, 'w', encoding='utf-8', newline='') as f:
        f.write(text)


def show_table(title: str, columns: Sequence[str], rows: List[Sequence[str]]) -> None:
    table = Table(title=title, min_width=len(title) + 4)  # keep the title on one line
    styles = ["cyan", "green", "yellow", "blue", "magenta", "red"]
    for i, column in enumerate(columns):
        table.add_column(column, style=styles[i % len(styles)])
    for row in rows:
        table.add_row(*row)
    console.print(table)
