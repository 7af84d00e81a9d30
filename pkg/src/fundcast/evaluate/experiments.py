"""End-to-end experiment harness: pipeline runs, horizon tables, top-k
ablation, and the repeat-funding comparison.

A pipeline run is: horizon labels -> temporal split -> publisher/site
ranks fitted on the training side -> feature assembly -> min-max scaling
fitted on train -> positive upsampling of train only -> boosted model ->
test probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, EmptyCorpusError
from ..featurize import (
    FeatureManifest,
    FeatureMatrix,
    FeatureModels,
    apply_minmax,
    assemble_feature_matrix,
    build_manifest,
    fit_minmax,
    rank_publishers,
    rank_sites,
)
from ..featurize.publishers import PublisherRank, SiteRank
from ..ingest.types import Corpus
from ..learn import Dataset, GbdtModel, TrainConfig, feature_importance, train_gbdt
from .labeling import HorizonConfig, label_horizon
from .metrics import DEFAULT_BETA, CutoffSweep, MetricsReport, compute_metrics, sweep_cutoffs
from .splits import SplitIndices, temporal_split, upsample_positive


def fit_training_ranks(corpus: Corpus, observations, split: SplitIndices
                       ) -> tuple[PublisherRank, SiteRank]:
    """Publisher/site popularity fitted on training-side companies only,
    using records dated before the latest training prediction date."""
    train_obs = [observations[i] for i in split.train]
    if not train_obs:
        raise EmptyCorpusError("empty training split")
    train_companies = {obs.company_id for obs in train_obs}
    latest = max(obs.prediction_date for obs in train_obs)
    press = [
        p
        for company_id in sorted(train_companies)
        for p in corpus.press.get(company_id, ())
        if p.published_on < latest
    ]
    searches = [
        s
        for company_id in sorted(train_companies)
        for s in corpus.search.get(company_id, ())
        if s.query_date < latest
    ]
    return rank_publishers(press), rank_sites(searches)


@dataclass
class PipelineRun:
    manifest: FeatureManifest
    matrix: FeatureMatrix
    labels: list[int]
    split: SplitIndices
    train: Dataset        # scaled + upsampled
    test: Dataset         # scaled
    model: GbdtModel
    test_probabilities: np.ndarray

    def test_labels(self) -> list[int]:
        return list(self.test.labels)

    def metrics_at(self, cutoff: float, beta: float = DEFAULT_BETA) -> MetricsReport:
        return compute_metrics(self.test.labels, self.test_probabilities, cutoff, beta)

    def sweep(self, beta: float = DEFAULT_BETA) -> CutoffSweep:
        return sweep_cutoffs(self.test.labels, self.test_probabilities, beta)


def _dataset_from_rows(manifest: FeatureManifest, rows, labels) -> Dataset:
    return Dataset(manifest=manifest, rows=[list(r.values) for r in rows], labels=labels)


def run_pipeline(corpus: Corpus, observations, horizon: HorizonConfig,
                 train_config: TrainConfig | None = None,
                 models: FeatureModels | None = None,
                 manifest: FeatureManifest | None = None,
                 ratio: float = 0.85) -> PipelineRun:
    if not observations:
        raise EmptyCorpusError("no observation points")
    horizon.validate()
    train_config = (train_config or TrainConfig()).validate()
    manifest = manifest or build_manifest()

    labels = [
        label_horizon(corpus.rounds.get(obs.company_id, ()), obs, horizon)
        for obs in observations
    ]
    split = temporal_split(observations, ratio)
    ranks, site_ranks = fit_training_ranks(corpus, observations, split)
    matrix = assemble_feature_matrix(
        corpus, observations, ranks, site_ranks, manifest, models
    )

    train_rows = [matrix.rows[i] for i in split.train]
    test_rows = [matrix.rows[i] for i in split.test]
    scaler = fit_minmax(manifest, train_rows)
    train_rows = apply_minmax(scaler, manifest, train_rows)
    test_rows = apply_minmax(scaler, manifest, test_rows)

    train = _dataset_from_rows(manifest, train_rows, [labels[i] for i in split.train])
    test = _dataset_from_rows(manifest, test_rows, [labels[i] for i in split.test])
    train = upsample_positive(train, train_config.seed)

    model = train_gbdt(train, train_config)
    probabilities = model.predict_proba(test)
    return PipelineRun(
        manifest=manifest,
        matrix=matrix,
        labels=labels,
        split=split,
        train=train,
        test=test,
        model=model,
        test_probabilities=probabilities,
    )


# ------------------------------------------------------------- experiments

def year_range_experiment(corpus: Corpus, observations,
                          train_config: TrainConfig | None = None,
                          models: FeatureModels | None = None,
                          horizons=(1, 2, 3, 4, 5),
                          stage_floor: str | None = None,
                          cutoff: float = 0.5,
                          beta: float = DEFAULT_BETA,
                          ratio: float = 0.85) -> list[dict]:
    """Relabel the same observations per horizon and retrain per horizon."""
    table = []
    for horizon_years in horizons:
        horizon = HorizonConfig(horizon_years=horizon_years, stage_floor=stage_floor)
        run = run_pipeline(corpus, observations, horizon, train_config, models, ratio=ratio)
        report = run.metrics_at(cutoff, beta)
        table.append({
            "horizon_years": horizon_years,
            "positive_rate": sum(run.labels) / len(run.labels),
            "precision": report.precision,
            "recall": report.recall,
            "f1": report.f1,
            "f_beta": report.f_beta,
        })
    return table


def topk_feature_experiment(corpus: Corpus, observations, k: int,
                            horizon: HorizonConfig,
                            train_config: TrainConfig | None = None,
                            models: FeatureModels | None = None,
                            cutoff: float = 0.5,
                            beta: float = DEFAULT_BETA,
                            ratio: float = 0.85,
                            full_run: PipelineRun | None = None) -> dict:
    """Retrain on the k most important features and compare to the full model."""
    manifest = (full_run.manifest if full_run else None) or build_manifest()
    if k < 1 or k > len(manifest):
        raise ConfigError(f"k must be within [1, {len(manifest)}]")
    run = full_run or run_pipeline(
        corpus, observations, horizon, train_config, models, manifest, ratio
    )
    ranked = feature_importance(run.model)
    top_names = [name for name, _ in ranked[:k]]
    train_k = run.train.select_features(top_names)
    test_k = run.test.select_features(top_names)
    model_k = train_gbdt(train_k, run.model.config)
    probabilities_k = model_k.predict_proba(test_k)

    full_report = run.metrics_at(cutoff, beta)
    topk_report = compute_metrics(test_k.labels, probabilities_k, cutoff, beta)
    retained = topk_report.f1 / full_report.f1 if full_report.f1 > 0 else 0.0
    return {
        "k": k,
        "top_features": top_names,
        "full": full_report,
        "topk": topk_report,
        "retained_f1_ratio": retained,
        "full_run": run,
    }


def series_a_experiment(corpus: Corpus, observations,
                        train_config: TrainConfig | None = None,
                        models: FeatureModels | None = None,
                        cutoffs=(0.5, 0.75),
                        beta: float = DEFAULT_BETA,
                        ratio: float = 0.85) -> dict:
    """Restrict to companies with a prior angel/seed round and predict a
    series-A-or-later round within one year."""
    filtered = []
    for obs in observations:
        prior = corpus.rounds.get(obs.company_id, ())
        if any(
            r.announced_on < obs.prediction_date and r.stage in ("angel", "seed")
            for r in prior
        ):
            filtered.append(obs)
    if not filtered:
        raise EmptyCorpusError("no companies with a prior angel/seed round")
    horizon = HorizonConfig(horizon_years=1, stage_floor="series_a")
    run = run_pipeline(corpus, filtered, horizon, train_config, models, ratio=ratio)
    rows = []
    for cutoff in cutoffs:
        report = run.metrics_at(cutoff, beta)
        rows.append({
            "cutoff": cutoff,
            "precision": report.precision,
            "recall": report.recall,
            "f_beta": report.f_beta,
            "f1": report.f1,
        })
    return {
        "datapoints": len(filtered),
        "positive_rate": sum(run.labels) / len(run.labels),
        "rows": rows,
        "run": run,
    }
