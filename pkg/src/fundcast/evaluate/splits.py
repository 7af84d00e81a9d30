"""Temporal train/test splitting and positive-class upsampling.

The split assigns the latest-dated observations to test, so training never
sees material from a test observation's future: for any company, every
observation later than one in test is itself in test.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from ..errors import DegenerateTrainingError
from ..learn.dataset import Dataset


@dataclass(frozen=True)
class SplitIndices:
    train: tuple[int, ...]
    test: tuple[int, ...]


def temporal_split(observations, ratio: float = 0.85) -> SplitIndices:
    """Index split with floor(n * (1 - ratio)) test rows, latest dates last."""
    n = len(observations)
    order = sorted(
        range(n),
        key=lambda i: (observations[i].prediction_date, observations[i].company_id),
    )
    test_size = math.floor(n * (1.0 - ratio) + 1e-9)  # epsilon absorbs float dust
    test = set(order[n - test_size:]) if test_size else set()
    return SplitIndices(
        train=tuple(i for i in range(n) if i not in test),
        test=tuple(i for i in range(n) if i in test),
    )


def upsample_positive(train: Dataset, seed: int) -> Dataset:
    """Resample positives with replacement until both classes match; the
    input dataset is left untouched."""
    positives = [i for i, label in enumerate(train.labels) if label == 1]
    negatives = [i for i, label in enumerate(train.labels) if label == 0]
    if not positives or not negatives:
        raise DegenerateTrainingError("both classes must be present to upsample")
    shortfall = len(negatives) - len(positives)
    if shortfall <= 0:
        return train
    rng = random.Random(seed)
    extra = rng.choices(positives, k=shortfall)
    rows = list(train.rows) + [train.rows[i] for i in extra]
    labels = list(train.labels) + [1] * shortfall
    return Dataset(manifest=train.manifest, rows=rows, labels=labels)
