"""Plain-text and CSV rendering for experiment tables."""

from __future__ import annotations

import csv
from pathlib import Path


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def render_table(headers: list[str], rows: list[list]) -> str:
    cells = [[_cell(v) for v in row] for row in rows]
    widths = [
        max(len(header), *(len(row[i]) for row in cells)) if cells else len(header)
        for i, header in enumerate(headers)
    ]
    lines = [
        "  ".join(header.ljust(widths[i]) for i, header in enumerate(headers)),
        "  ".join("-" * widths[i] for i in range(len(headers))),
    ]
    for row in cells:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(headers))))
    return "\n".join(lines)


def write_csv(path: str | Path, headers: list[str], rows: list[list],
              meta: dict | None = None) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        if meta:
            pairs = " ".join(f"{key}={value}" for key, value in sorted(meta.items()))
            handle.write(f"# {pairs}\n")
        writer = csv.writer(handle)
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
