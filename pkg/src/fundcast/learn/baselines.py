"""Classical baseline models behind a common predict_proba surface.

These are standard methods, so they wrap scikit-learn estimators rather
than reimplementations; categorical and text columns are index-coded
first, matching how the non-categorical-aware models in the source
comparison consumed the data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.ensemble import GradientBoostingClassifier, RandomForestClassifier
from sklearn.linear_model import LogisticRegression
from sklearn.naive_bayes import GaussianNB
from sklearn.neighbors import KNeighborsClassifier
from sklearn.tree import DecisionTreeClassifier

from ..errors import ConfigError, DegenerateTrainingError
from .dataset import Dataset, IndexEncoder
from .gbdt import TrainConfig

BASELINE_KINDS = (
    "logistic_regression",
    "naive_bayes",
    "knn",
    "decision_tree",
    "random_forest",
    "gradient_boost_plain",
)


def _build_estimator(kind: str, config: TrainConfig):
    if kind == "logistic_regression":
        return LogisticRegression(max_iter=2000, random_state=config.seed)
    if kind == "naive_bayes":
        return GaussianNB()
    if kind == "knn":
        return KNeighborsClassifier(n_neighbors=config.knn_neighbors)
    if kind == "decision_tree":
        return DecisionTreeClassifier(
            max_depth=config.max_depth,
            min_samples_leaf=config.min_samples_leaf,
            random_state=config.seed,
        )
    if kind == "random_forest":
        return RandomForestClassifier(
            n_estimators=min(config.tree_count, 300),
            min_samples_leaf=config.min_samples_leaf,
            random_state=config.seed,
        )
    if kind == "gradient_boost_plain":
        return GradientBoostingClassifier(
            n_estimators=min(config.tree_count, 300),
            max_depth=config.max_depth,
            learning_rate=config.learning_rate,
            random_state=config.seed,
        )
    raise ConfigError(f"unknown baseline kind {kind!r}")


@dataclass
class BaselineModel:
    kind: str
    encoder: IndexEncoder
    estimator: object
    positive_index: int

    def predict_proba(self, data) -> np.ndarray:
        rows = data.rows if isinstance(data, Dataset) else list(data)
        matrix = self.encoder.transform(rows)
        return self.estimator.predict_proba(matrix)[:, self.positive_index]


def train_baseline(kind: str, train: Dataset, config: TrainConfig | None = None) -> BaselineModel:
    config = (config or TrainConfig()).validate()
    labels = np.asarray(train.labels)
    if labels.sum() in (0, len(labels)):
        raise DegenerateTrainingError("training labels contain a single class")
    estimator = _build_estimator(kind, config)
    encoder = IndexEncoder.fit(train)
    matrix = encoder.transform(train.rows)
    estimator.fit(matrix, labels)
    positive_index = int(np.where(estimator.classes_ == 1)[0][0])
    return BaselineModel(
        kind=kind, encoder=encoder, estimator=estimator, positive_index=positive_index
    )
