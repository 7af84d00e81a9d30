"""Gradient-boosted regression trees on binary logloss, built from scratch.

Each stage fits a depth-limited tree to the negative gradients of the
sigmoid predictions using exact greedy splits (gain = G_l^2/H_l +
G_r^2/H_r - G^2/H); leaf values are Newton steps -G/H shrunk by the
learning rate. No histogram binning: desk-scale data keeps exact search
affordable and bit-for-bit deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, DegenerateTrainingError

_PROB_EPS = 1e-12
_MIN_GAIN = 1e-12


@dataclass(frozen=True)
class TrainConfig:
    tree_count: int = 500
    max_depth: int = 6
    learning_rate: float = 0.1
    min_samples_leaf: int = 5
    seed: int = 0
    permutation_count: int = 1
    prior_weight: float = 1.0
    knn_neighbors: int = 5

    def validate(self) -> "TrainConfig":
        if self.tree_count < 1:
            raise ConfigError("tree_count must be >= 1")
        if not 0.0 < self.learning_rate <= 1.0:
            raise ConfigError("learning_rate must be in (0, 1]")
        if self.max_depth < 1:
            raise ConfigError("max_depth must be >= 1")
        if self.min_samples_leaf < 1:
            raise ConfigError("min_samples_leaf must be >= 1")
        if self.permutation_count < 1:
            raise ConfigError("permutation_count must be >= 1")
        if self.prior_weight <= 0:
            raise ConfigError("prior_weight must be > 0")
        if self.knn_neighbors < 1:
            raise ConfigError("knn_neighbors must be >= 1")
        return self


def sigmoid(raw: np.ndarray) -> np.ndarray:
    raw = np.asarray(raw, dtype=float)
    out = np.empty_like(raw)
    positive = raw >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-raw[positive]))
    exp_raw = np.exp(raw[~positive])
    out[~positive] = exp_raw / (1.0 + exp_raw)
    return out


def logloss(labels: np.ndarray, probabilities: np.ndarray) -> float:
    p = np.clip(probabilities, _PROB_EPS, 1.0 - _PROB_EPS)
    return float(-np.mean(labels * np.log(p) + (1.0 - labels) * np.log(1.0 - p)))


def _best_split(idx: np.ndarray, x_sorted: np.ndarray, gh: np.ndarray, min_leaf: int):
    """Best (gain, feature, threshold, left row ids) over all exact split
    candidates, or None when nothing improves on the unsplit node.

    ``idx`` holds the node's row ids presorted per feature (n_node x d) and
    ``x_sorted`` the matching values; both descend from one global argsort,
    so nothing is re-sorted per node. ``gh`` stacks gradient and hessian.
    """
    n_node = idx.shape[0]
    if n_node < 2 * min_leaf:
        return None
    gh_left = np.cumsum(gh[idx], axis=0)
    g_total = float(gh_left[-1, 0, 0])
    h_total = float(gh_left[-1, 0, 1])
    g_left = gh_left[:-1, :, 0]
    h_left = gh_left[:-1, :, 1]
    g_right = g_total - g_left
    h_right = h_total - h_left

    counts = np.arange(1, n_node)[:, None]
    valid = (
        (counts >= min_leaf)
        & (counts <= n_node - min_leaf)
        & (x_sorted[1:] > x_sorted[:-1])
    )
    if not valid.any():
        return None
    with np.errstate(divide="ignore", invalid="ignore"):
        gain = (
            g_left**2 / np.maximum(h_left, _PROB_EPS)
            + g_right**2 / np.maximum(h_right, _PROB_EPS)
            - g_total**2 / max(h_total, _PROB_EPS)
        )
    gain = np.where(valid, gain, -np.inf)
    flat = int(np.argmax(gain))
    row, feature = divmod(flat, idx.shape[1])
    best_gain = float(gain[row, feature])
    if not math.isfinite(best_gain) or best_gain <= _MIN_GAIN:
        return None
    threshold = float((x_sorted[row, feature] + x_sorted[row + 1, feature]) / 2.0)
    return best_gain, int(feature), threshold, idx[: row + 1, feature]


def _partition(idx: np.ndarray, x_sorted: np.ndarray, left_member: np.ndarray,
               left_count: int):
    """Split the presorted (ids, values) pair by membership, keeping
    per-feature order in both halves."""
    picked = left_member[idx].T
    n_features = idx.shape[1]
    right_count = idx.shape[0] - left_count
    left = idx.T[picked].reshape(n_features, left_count).T
    right = idx.T[~picked].reshape(n_features, right_count).T
    x_t = x_sorted.T
    left_x = x_t[picked].reshape(n_features, left_count).T
    right_x = x_t[~picked].reshape(n_features, right_count).T
    return (left, left_x), (right, right_x)


def _fit_tree(idx: np.ndarray, x_sorted: np.ndarray, gh: np.ndarray,
              depth_left: int, min_leaf: int, n_rows: int) -> dict:
    node_rows = idx[:, 0]
    total = gh[node_rows].sum(axis=0)
    leaf_value = -float(total[0]) / max(float(total[1]), _PROB_EPS)
    if depth_left == 0:
        return {"leaf": leaf_value}
    found = _best_split(idx, x_sorted, gh, min_leaf)
    if found is None:
        return {"leaf": leaf_value}
    gain, feature, threshold, left_rows = found
    left_member = np.zeros(n_rows, dtype=bool)
    left_member[left_rows] = True
    (left_idx, left_x), (right_idx, right_x) = _partition(
        idx, x_sorted, left_member, len(left_rows)
    )
    return {
        "feature": feature,
        "threshold": threshold,
        "gain": gain,
        "left": _fit_tree(left_idx, left_x, gh, depth_left - 1, min_leaf, n_rows),
        "right": _fit_tree(right_idx, right_x, gh, depth_left - 1, min_leaf, n_rows),
    }


def _apply_tree(node: dict, x: np.ndarray) -> np.ndarray:
    out = np.empty(x.shape[0], dtype=float)
    stack = [(node, np.arange(x.shape[0]))]
    while stack:
        current, idx = stack.pop()
        if "leaf" in current:
            out[idx] = current["leaf"]
            continue
        mask = x[idx, current["feature"]] <= current["threshold"]
        stack.append((current["left"], idx[mask]))
        stack.append((current["right"], idx[~mask]))
    return out


def _tree_gains(node: dict, gains: dict[int, float]) -> None:
    if "leaf" in node:
        return
    gains[node["feature"]] = gains.get(node["feature"], 0.0) + node["gain"]
    _tree_gains(node["left"], gains)
    _tree_gains(node["right"], gains)


@dataclass
class BoostedTrees:
    """Core numeric booster; reused by the topic classifier and the full
    categorical-aware model."""

    base_score: float = 0.0
    learning_rate: float = 0.1
    trees: list = field(default_factory=list)
    feature_count: int = 0
    staged_losses: list = field(default_factory=list)

    def fit(self, x: np.ndarray, labels: np.ndarray, config: TrainConfig) -> "BoostedTrees":
        config.validate()
        x = np.asarray(x, dtype=float)
        y = np.asarray(labels, dtype=float)
        positives = float(y.sum())
        negatives = float(len(y) - positives)
        if positives == 0 or negatives == 0:
            raise DegenerateTrainingError("training labels contain a single class")
        self.feature_count = x.shape[1]
        self.learning_rate = config.learning_rate
        self.base_score = math.log(positives / negatives)
        raw = np.full(len(y), self.base_score, dtype=float)
        self.trees = []
        self.staged_losses = []
        order = np.argsort(x, axis=0, kind="stable")  # one presort reused by every node
        x_presorted = np.take_along_axis(x, order, axis=0)
        for _ in range(config.tree_count):
            p = sigmoid(raw)
            grad = p - y
            hess = np.maximum(p * (1.0 - p), _PROB_EPS)
            gh = np.stack([grad, hess], axis=1)
            tree = _fit_tree(
                order, x_presorted, gh,
                config.max_depth, config.min_samples_leaf, len(y)
            )
            self.trees.append(tree)
            raw = raw + config.learning_rate * _apply_tree(tree, x)
            self.staged_losses.append(logloss(y, sigmoid(raw)))
        return self

    def predict_raw(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        raw = np.full(x.shape[0], self.base_score, dtype=float)
        for tree in self.trees:
            raw += self.learning_rate * _apply_tree(tree, x)
        return raw

    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        p = sigmoid(self.predict_raw(x))
        return np.clip(p, _PROB_EPS, 1.0 - _PROB_EPS)

    def gain_by_feature(self) -> dict[int, float]:
        gains: dict[int, float] = {}
        for tree in self.trees:
            _tree_gains(tree, gains)
        return gains

    def to_dict(self) -> dict:
        return {
            "base_score": self.base_score,
            "learning_rate": self.learning_rate,
            "feature_count": self.feature_count,
            "trees": self.trees,
            "staged_losses": self.staged_losses,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "BoostedTrees":
        return cls(
            base_score=payload["base_score"],
            learning_rate=payload["learning_rate"],
            trees=payload["trees"],
            feature_count=payload["feature_count"],
            staged_losses=payload.get("staged_losses", []),
        )
