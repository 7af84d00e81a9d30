"""Gradient-boosted trees with ordered target statistics, plus baselines."""

from .baselines import BASELINE_KINDS, BaselineModel, train_baseline
from .dataset import Dataset, IndexEncoder
from .encoding import (
    category_statistics,
    encode_text_with_statistics,
    encode_with_statistics,
    ordered_target_encode,
    ordered_text_encode,
    text_tokens,
    token_statistics,
)
from .gbdt import BoostedTrees, TrainConfig, logloss, sigmoid
from .model import GbdtModel, feature_importance, predict_proba, train_gbdt

__all__ = [
    "BASELINE_KINDS",
    "BaselineModel",
    "BoostedTrees",
    "Dataset",
    "GbdtModel",
    "IndexEncoder",
    "TrainConfig",
    "category_statistics",
    "encode_text_with_statistics",
    "encode_with_statistics",
    "feature_importance",
    "logloss",
    "ordered_target_encode",
    "ordered_text_encode",
    "predict_proba",
    "sigmoid",
    "text_tokens",
    "token_statistics",
    "train_baseline",
    "train_gbdt",
]
