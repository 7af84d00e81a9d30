"""Feature matrix CSV export/import.

Layout: one comment line carrying the seed and manifest hash, then a
header of company_id, prediction_date, label plus the manifest-ordered
feature names. Numeric cells use repr() so round-trips are exact.
"""

from __future__ import annotations

import csv
from pathlib import Path

from ..dates import parse_date
from ..errors import SchemaError
from .extract import FeatureMatrix, FeatureVector
from .manifest import FeatureManifest

_META_PREFIX = "# "


def _format_value(value, kind: str) -> str:
    if kind == "numeric":
        return repr(float(value))
    return str(value)


def write_matrix(path: str | Path, matrix: FeatureMatrix, labels: list[int],
                 seed: int) -> None:
    if len(labels) != len(matrix.rows):
        raise SchemaError("labels and rows must align")
    manifest = matrix.manifest
    with open(path, "w", newline="", encoding="utf-8") as handle:
        handle.write(f"{_META_PREFIX}seed={seed} manifest={manifest.content_hash()}\n")
        writer = csv.writer(handle)
        writer.writerow(["company_id", "prediction_date", "label", *manifest.names])
        for row, label in zip(matrix.rows, labels):
            writer.writerow([
                row.company_id,
                row.prediction_date.isoformat(),
                label,
                *[
                    _format_value(v, k)
                    for v, k in zip(row.values, manifest.kinds)
                ],
            ])


def read_matrix(path: str | Path, manifest: FeatureManifest
                ) -> tuple[FeatureMatrix, list[int], dict]:
    """Read a matrix written by write_matrix; verifies the manifest hash."""
    with open(path, newline="", encoding="utf-8") as handle:
        meta_line = handle.readline().strip()
        if not meta_line.startswith(_META_PREFIX):
            raise SchemaError(f"missing metadata line in {path}")
        meta = dict(
            part.split("=", 1) for part in meta_line[len(_META_PREFIX):].split()
        )
        if meta.get("manifest") != manifest.content_hash():
            raise SchemaError(
                "feature matrix was written against a different manifest"
            )
        reader = csv.reader(handle)
        header = next(reader)
        expected = ["company_id", "prediction_date", "label", *manifest.names]
        if header != expected:
            raise SchemaError(f"unexpected matrix header in {path}")
        rows = []
        labels = []
        for record in reader:
            company_id, date_text, label_text, *cells = record
            values = []
            for cell, kind in zip(cells, manifest.kinds):
                values.append(float(cell) if kind == "numeric" else cell)
            rows.append(
                FeatureVector(
                    company_id=company_id,
                    prediction_date=parse_date(date_text),
                    values=tuple(values),
                    mask=tuple(False for _ in values),
                )
            )
            labels.append(int(label_text))
    return FeatureMatrix(manifest=manifest, rows=tuple(rows)), labels, meta
