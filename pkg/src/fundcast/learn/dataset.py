"""Training dataset: manifest-aligned rows plus binary labels.

The manifest object is duck-typed: it must expose ``names`` (ordered
feature names), ``kinds`` (parallel "numeric"/"categorical"/"text" list),
and ``content_hash()``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import SchemaError


@dataclass
class Dataset:
    manifest: object
    rows: list[list]
    labels: list[int]

    def __post_init__(self):
        if len(self.rows) != len(self.labels):
            raise SchemaError("rows and labels must have equal length")
        width = len(self.manifest.names)
        for row in self.rows:
            if len(row) != width:
                raise SchemaError(
                    f"row width {len(row)} does not match manifest width {width}"
                )
        if any(label not in (0, 1) for label in self.labels):
            raise SchemaError("labels must be binary")

    def __len__(self) -> int:
        return len(self.rows)

    def take(self, indices) -> "Dataset":
        return Dataset(
            manifest=self.manifest,
            rows=[self.rows[i] for i in indices],
            labels=[self.labels[i] for i in indices],
        )

    def column(self, index: int) -> list:
        return [row[index] for row in self.rows]

    def select_features(self, names: list[str]) -> "Dataset":
        """Project onto a feature subset, preserving manifest order."""
        projected = self.manifest.select(names)
        keep = [self.manifest.index_of(name) for name in projected.names]
        return Dataset(
            manifest=projected,
            rows=[[row[i] for i in keep] for row in self.rows],
            labels=list(self.labels),
        )


@dataclass
class IndexEncoder:
    """Plain index-coding of categorical/text columns for the baseline
    models; unseen values map to -1."""

    columns: dict[int, dict[str, int]]

    @classmethod
    def fit(cls, dataset: Dataset) -> "IndexEncoder":
        columns = {}
        for i, kind in enumerate(dataset.manifest.kinds):
            if kind == "numeric":
                continue
            values = sorted({str(v) for v in dataset.column(i)})
            columns[i] = {value: code for code, value in enumerate(values)}
        return cls(columns=columns)

    def transform(self, rows: list[list]) -> np.ndarray:
        out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=float)
        for r, row in enumerate(rows):
            for i, value in enumerate(row):
                codes = self.columns.get(i)
                if codes is None:
                    out[r, i] = float(value)
                else:
                    out[r, i] = codes.get(str(value), -1)
        return out
