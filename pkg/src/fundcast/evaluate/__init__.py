"""Labeling, splits, balancing, metrics, sweeps, and experiments."""

from .experiments import (
    PipelineRun,
    fit_training_ranks,
    run_pipeline,
    series_a_experiment,
    topk_feature_experiment,
    year_range_experiment,
)
from .labeling import HORIZON_CHOICES, STAGE_RANK, HorizonConfig, label_horizon
from .metrics import (
    CANONICAL_CUTOFFS,
    DEFAULT_BETA,
    CutoffSweep,
    MetricsReport,
    compute_metrics,
    f_beta,
    roc_auc,
    sweep_cutoffs,
)
from .report import render_table, write_csv
from .splits import SplitIndices, temporal_split, upsample_positive

__all__ = [
    "CANONICAL_CUTOFFS",
    "CutoffSweep",
    "DEFAULT_BETA",
    "HORIZON_CHOICES",
    "HorizonConfig",
    "MetricsReport",
    "PipelineRun",
    "STAGE_RANK",
    "SplitIndices",
    "compute_metrics",
    "f_beta",
    "fit_training_ranks",
    "label_horizon",
    "render_table",
    "roc_auc",
    "run_pipeline",
    "series_a_experiment",
    "sweep_cutoffs",
    "temporal_split",
    "topk_feature_experiment",
    "upsample_positive",
    "write_csv",
    "year_range_experiment",
]
