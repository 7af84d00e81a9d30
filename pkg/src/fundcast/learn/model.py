"""The categorical-aware boosted model: ordered encodings + trees, with a
self-describing JSON serialization gated on the manifest hash."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import DegenerateTrainingError, SchemaError
from .dataset import Dataset
from .encoding import (
    category_statistics,
    encode_text_with_statistics,
    encode_with_statistics,
    ordered_target_encode,
    ordered_text_encode,
    token_statistics,
)
from .gbdt import BoostedTrees, TrainConfig

FORMAT_NAME = "fundcast-gbdt"
FORMAT_VERSION = 1


@dataclass
class GbdtModel:
    config: TrainConfig
    manifest_hash: str
    feature_names: list[str]
    feature_kinds: list[str]
    booster: BoostedTrees
    cat_tables: dict[str, dict]       # feature name -> {value: [sum, count]}
    cat_means: dict[str, float]
    text_tables: dict[str, dict]      # feature name -> {token: [sum, count]}
    text_means: dict[str, float]

    # ------------------------------------------------------------- encoding

    def _encode_eval(self, rows: list[list]) -> np.ndarray:
        matrix = np.empty((len(rows), len(self.feature_names)), dtype=float)
        prior = self.config.prior_weight
        for i, (name, kind) in enumerate(zip(self.feature_names, self.feature_kinds)):
            column = [row[i] for row in rows]
            if kind == "numeric":
                matrix[:, i] = np.asarray(column, dtype=float)
            elif kind == "categorical":
                stats = {v: tuple(sc) for v, sc in self.cat_tables[name].items()}
                matrix[:, i] = encode_with_statistics(
                    [str(v) for v in column], stats, self.cat_means[name], prior
                )
            else:
                stats = {t: tuple(sc) for t, sc in self.text_tables[name].items()}
                matrix[:, i] = encode_text_with_statistics(
                    [str(v) for v in column], stats, self.text_means[name], prior
                )
        return matrix

    def predict_proba(self, data) -> np.ndarray:
        """Probabilities for a Dataset or raw manifest-aligned rows."""
        if isinstance(data, Dataset):
            if data.manifest.content_hash() != self.manifest_hash:
                raise SchemaError("dataset manifest does not match the trained model")
            rows = data.rows
        else:
            rows = list(data)
            for row in rows:
                if len(row) != len(self.feature_names):
                    raise SchemaError(
                        f"row width {len(row)} != model width {len(self.feature_names)}"
                    )
        if not rows:
            return np.empty(0, dtype=float)
        return self.booster.predict_proba(self._encode_eval(rows))

    # ------------------------------------------------------------ reporting

    def staged_losses(self) -> list[float]:
        return list(self.booster.staged_losses)

    # -------------------------------------------------------- serialization

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "config": {
                "tree_count": self.config.tree_count,
                "max_depth": self.config.max_depth,
                "learning_rate": self.config.learning_rate,
                "min_samples_leaf": self.config.min_samples_leaf,
                "seed": self.config.seed,
                "permutation_count": self.config.permutation_count,
                "prior_weight": self.config.prior_weight,
                "knn_neighbors": self.config.knn_neighbors,
            },
            "manifest_hash": self.manifest_hash,
            "feature_names": self.feature_names,
            "feature_kinds": self.feature_kinds,
            "booster": self.booster.to_dict(),
            "cat_tables": self.cat_tables,
            "cat_means": self.cat_means,
            "text_tables": self.text_tables,
            "text_means": self.text_means,
        }

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_dict(), handle, sort_keys=True, separators=(",", ":"))
            handle.write("\n")

    @classmethod
    def from_dict(cls, payload: dict) -> "GbdtModel":
        if payload.get("format") != FORMAT_NAME:
            raise SchemaError("not a fundcast model file")
        return cls(
            config=TrainConfig(**payload["config"]),
            manifest_hash=payload["manifest_hash"],
            feature_names=payload["feature_names"],
            feature_kinds=payload["feature_kinds"],
            booster=BoostedTrees.from_dict(payload["booster"]),
            cat_tables=payload["cat_tables"],
            cat_means=payload["cat_means"],
            text_tables=payload["text_tables"],
            text_means=payload["text_means"],
        )

    @classmethod
    def load(cls, path: str | Path) -> "GbdtModel":
        with open(path, encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))


def train_gbdt(train: Dataset, config: TrainConfig | None = None) -> GbdtModel:
    """Fit ordered encodings plus the boosted ensemble; deterministic per seed."""
    config = (config or TrainConfig()).validate()
    labels = np.asarray(train.labels, dtype=float)
    if labels.sum() in (0.0, float(len(labels))):
        raise DegenerateTrainingError("training labels contain a single class")

    rng = np.random.default_rng(config.seed)
    permutations = [rng.permutation(len(train)) for _ in range(config.permutation_count)]

    names = list(train.manifest.names)
    kinds = list(train.manifest.kinds)
    matrix = np.empty((len(train), len(names)), dtype=float)
    cat_tables: dict[str, dict] = {}
    cat_means: dict[str, float] = {}
    text_tables: dict[str, dict] = {}
    text_means: dict[str, float] = {}

    for i, (name, kind) in enumerate(zip(names, kinds)):
        column = train.column(i)
        if kind == "numeric":
            matrix[:, i] = np.asarray(column, dtype=float)
            continue
        if kind == "categorical":
            values = [str(v) for v in column]
            encodings = [
                ordered_target_encode(values, labels, perm, config.prior_weight)
                for perm in permutations
            ]
            matrix[:, i] = np.mean(encodings, axis=0)
            stats, mean = category_statistics(values, labels)
            cat_tables[name] = {v: [s, c] for v, (s, c) in stats.items()}
            cat_means[name] = mean
        else:
            texts = [str(v) for v in column]
            encodings = [
                ordered_text_encode(texts, labels, perm, config.prior_weight)
                for perm in permutations
            ]
            matrix[:, i] = np.mean(encodings, axis=0)
            stats, mean = token_statistics(texts, labels)
            text_tables[name] = {t: [s, c] for t, (s, c) in stats.items()}
            text_means[name] = mean

    booster = BoostedTrees().fit(matrix, labels, config)
    return GbdtModel(
        config=config,
        manifest_hash=train.manifest.content_hash(),
        feature_names=names,
        feature_kinds=kinds,
        booster=booster,
        cat_tables=cat_tables,
        cat_means=cat_means,
        text_tables=text_tables,
        text_means=text_means,
    )


def predict_proba(model: GbdtModel, data) -> np.ndarray:
    return model.predict_proba(data)


def feature_importance(model: GbdtModel) -> list[tuple[str, float]]:
    """Total split gain per feature, normalized to sum 1, sorted descending
    (ties broken by feature name)."""
    gains = model.booster.gain_by_feature()
    total = sum(gains.values())
    scores = []
    for i, name in enumerate(model.feature_names):
        gain = gains.get(i, 0.0)
        scores.append((name, gain / total if total > 0 else 0.0))
    scores.sort(key=lambda pair: (-pair[1], pair[0]))
    return scores
