"""Min-max scaling of numeric feature columns, fitted on training rows only.

Evaluation values land in [0, 1] by clipping; constant training columns map
to 0 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EmptyCorpusError
from .extract import FeatureVector
from .manifest import FeatureManifest


@dataclass(frozen=True)
class ScalerParams:
    column_min: dict[str, float]
    column_max: dict[str, float]


def fit_minmax(manifest: FeatureManifest, rows: list[FeatureVector]) -> ScalerParams:
    if not rows:
        raise EmptyCorpusError("cannot fit a scaler on zero rows")
    column_min: dict[str, float] = {}
    column_max: dict[str, float] = {}
    for i in manifest.numeric_indices():
        values = [float(r.values[i]) for r in rows]
        name = manifest.names[i]
        column_min[name] = min(values)
        column_max[name] = max(values)
    return ScalerParams(column_min=column_min, column_max=column_max)


def apply_minmax(params: ScalerParams, manifest: FeatureManifest,
                 rows: list[FeatureVector]) -> list[FeatureVector]:
    numeric = manifest.numeric_indices()
    scaled_rows = []
    for row in rows:
        values = list(row.values)
        for i in numeric:
            name = manifest.names[i]
            low = params.column_min[name]
            high = params.column_max[name]
            if high <= low:
                values[i] = 0.0
                continue
            scaled = (float(values[i]) - low) / (high - low)
            values[i] = min(max(scaled, 0.0), 1.0)
        scaled_rows.append(
            FeatureVector(
                company_id=row.company_id,
                prediction_date=row.prediction_date,
                values=tuple(values),
                mask=row.mask,
            )
        )
    return scaled_rows
