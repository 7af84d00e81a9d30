"""Command-line surface: one subcommand per pipeline stage.

generate -> featurize -> train -> evaluate/sweep/ablate run as a smoke
pipeline on fixture directories; series-a and predict round out the
experiment surface. Exit codes: 0 success, 1 validation error, 2 I/O
error. Every artifact embeds the seed and the feature-manifest hash, so
identical invocations produce identical bytes.

The temporal split is deterministic given observation dates, which is why
featurize (publisher ranks), train, and evaluate can recompute it
independently and agree.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import topics
from .dates import parse_date
from .errors import FundcastError, SchemaError
from .evaluate import (
    DEFAULT_BETA,
    HorizonConfig,
    compute_metrics,
    fit_training_ranks,
    render_table,
    roc_auc,
    series_a_experiment,
    sweep_cutoffs,
    temporal_split,
    upsample_positive,
    write_csv,
)
from .evaluate.labeling import label_horizon
from .featurize import (
    FeatureManifest,
    FeatureModels,
    apply_minmax,
    assemble_feature_matrix,
    build_manifest,
    fit_minmax,
    read_matrix,
    write_matrix,
)
from .ingest import (
    GenConfig,
    ObservationPoint,
    build_observations,
    generate_synthetic_corpus,
    load_corpus,
)
from .learn import Dataset, GbdtModel, TrainConfig, train_gbdt

BUNDLE_FORMAT = "fundcast-model-bundle"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _add_common(parser, *, seed=True, beta=False):
    if seed:
        parser.add_argument("--seed", type=int, default=0, help="RNG seed recorded in artifacts")
    if beta:
        parser.add_argument("--beta", type=float, default=DEFAULT_BETA,
                            help="beta for the F-beta score (default 0.1)")


def _add_train_flags(parser):
    parser.add_argument("--trees", type=int, default=150, help="boosting stages")
    parser.add_argument("--depth", type=int, default=4, help="max tree depth")
    parser.add_argument("--learning-rate", type=float, default=0.1)
    parser.add_argument("--min-leaf", type=int, default=5)
    parser.add_argument("--ratio", type=float, default=0.85,
                        help="train share for the temporal split")


def build_parser() -> _Parser:
    parser = _Parser(prog="fundcast", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a synthetic fixture corpus")
    p.add_argument("--companies", type=int, default=200)
    p.add_argument("--positive-rate", type=float, default=0.3)
    p.add_argument("--signal", type=float, default=1.0)
    p.add_argument("--observation-year", type=int, default=2021)
    p.add_argument("--horizon", type=int, default=1)
    p.add_argument("--out", required=True)
    _add_common(p)

    p = sub.add_parser("featurize", help="extract the feature matrix from fixtures")
    p.add_argument("--fixtures", required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--prediction-dates", default="2021-01-01",
                   help="comma-separated ISO observation dates")
    p.add_argument("--horizon", type=int, default=1)
    p.add_argument("--stage-floor", default=None)
    p.add_argument("--headlines", default=None,
                   help="labeled-headline CSV for the topic model (default: synthetic)")
    p.add_argument("--ratio", type=float, default=0.85)
    _add_common(p)

    p = sub.add_parser("train", help="train the boosted model on a feature matrix")
    p.add_argument("--features", required=True)
    p.add_argument("--manifest", default=None,
                   help="manifest CSV (default: manifest.csv next to --features)")
    p.add_argument("--model", required=True, help="output model bundle path")
    _add_train_flags(p)
    _add_common(p)

    p = sub.add_parser("evaluate", help="score the held-out split of a feature matrix")
    p.add_argument("--features", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--model", required=True)
    p.add_argument("--cutoff", type=float, default=0.5)
    p.add_argument("--ratio", type=float, default=0.85)
    p.add_argument("--out", default=None, help="optional CSV report path")
    _add_common(p, seed=False, beta=True)

    p = sub.add_parser("sweep", help="cutoff sweep over the held-out split")
    p.add_argument("--features", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--model", required=True)
    p.add_argument("--ratio", type=float, default=0.85)
    p.add_argument("--out", default=None)
    _add_common(p, seed=False, beta=True)

    p = sub.add_parser("ablate", help="top-k feature ablation")
    p.add_argument("--features", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--top-k", type=int, required=True)
    p.add_argument("--cutoff", type=float, default=0.5)
    p.add_argument("--out", default=None)
    _add_train_flags(p)
    _add_common(p, beta=True)

    p = sub.add_parser("series-a", help="repeat-funding experiment on fixtures")
    p.add_argument("--fixtures", required=True)
    p.add_argument("--prediction-dates", default="2021-01-01")
    p.add_argument("--headlines", default=None)
    p.add_argument("--cutoff", type=float, nargs="*", default=[0.5, 0.75])
    p.add_argument("--out", default=None)
    _add_train_flags(p)
    _add_common(p, beta=True)

    p = sub.add_parser("predict", help="score rows with a trained model bundle")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--out", default=None, help="optional predictions CSV path")
    return parser


# ------------------------------------------------------------------ helpers

def _topic_model(args) -> topics.TopicModel:
    if getattr(args, "headlines", None):
        examples = topics.load_headlines(args.headlines)
    else:
        examples = topics.synthetic_headlines(per_class=70, seed=args.seed)
    config = dataclasses.replace(topics.TOPIC_TRAIN_DEFAULTS, seed=args.seed)
    return topics.train_topic_classifier(examples, config)


def _train_config(args) -> TrainConfig:
    return TrainConfig(
        tree_count=args.trees,
        max_depth=args.depth,
        learning_rate=args.learning_rate,
        min_samples_leaf=args.min_leaf,
        seed=args.seed,
    )


def _prediction_dates(raw: str):
    return [parse_date(part) for part in raw.split(",") if part]


def _manifest_path(args) -> Path:
    if args.manifest:
        return Path(args.manifest)
    return Path(args.features).parent / "manifest.csv"


def _load_features(args):
    manifest = FeatureManifest.read(_manifest_path(args))
    matrix, labels, meta = read_matrix(args.features, manifest)
    return manifest, matrix, labels, meta


def _split_datasets(manifest, matrix, labels, ratio):
    observations = [
        ObservationPoint(company_id=r.company_id, prediction_date=r.prediction_date)
        for r in matrix.rows
    ]
    split = temporal_split(observations, ratio)
    train_rows = [matrix.rows[i] for i in split.train]
    test_rows = [matrix.rows[i] for i in split.test]
    scaler = fit_minmax(manifest, train_rows)
    train_rows = apply_minmax(scaler, manifest, train_rows)
    test_rows = apply_minmax(scaler, manifest, test_rows)
    train = Dataset(manifest, [list(r.values) for r in train_rows],
                    [labels[i] for i in split.train])
    test = Dataset(manifest, [list(r.values) for r in test_rows],
                   [labels[i] for i in split.test])
    test_ids = [(matrix.rows[i].company_id, matrix.rows[i].prediction_date)
                for i in split.test]
    return train, test, scaler, test_ids


def _save_bundle(path, model, scaler, seed):
    payload = {
        "format": BUNDLE_FORMAT,
        "seed": seed,
        "manifest_hash": model.manifest_hash,
        "scaler": {"min": scaler.column_min, "max": scaler.column_max},
        "model": model.to_dict(),
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, sort_keys=True, separators=(",", ":"))
        handle.write("\n")


def _load_bundle(path):
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    if payload.get("format") != BUNDLE_FORMAT:
        raise SchemaError(f"{path} is not a model bundle")
    from .featurize.scaling import ScalerParams

    scaler = ScalerParams(
        column_min=payload["scaler"]["min"], column_max=payload["scaler"]["max"]
    )
    return GbdtModel.from_dict(payload["model"]), scaler, payload.get("seed", 0)


# ------------------------------------------------------------- subcommands

def _cmd_generate(args) -> int:
    config = GenConfig(
        companies=args.companies,
        positive_rate=args.positive_rate,
        signal=args.signal,
        observation_year=args.observation_year,
        horizon_years=args.horizon,
    )
    out = Path(args.out)
    generate_synthetic_corpus(config, args.seed, out)
    meta = {"seed": args.seed, **dataclasses.asdict(config)}
    with open(out / "generation_meta.json", "w", encoding="utf-8") as handle:
        json.dump(meta, handle, sort_keys=True, indent=2)
        handle.write("\n")
    print(f"wrote fixtures for {args.companies} companies to {out}")
    return 0


def _cmd_featurize(args) -> int:
    corpus = load_corpus(args.fixtures)
    dates = _prediction_dates(args.prediction_dates)
    observations = build_observations(corpus, dates)
    if not observations:
        raise FundcastError("no valid observation points for the given dates")
    manifest = build_manifest()
    horizon = HorizonConfig(args.horizon, stage_floor=args.stage_floor)
    labels = [
        label_horizon(corpus.rounds.get(obs.company_id, ()), obs, horizon)
        for obs in observations
    ]
    split = temporal_split(observations, args.ratio)
    ranks, site_ranks = fit_training_ranks(corpus, observations, split)
    model = _topic_model(args)
    matrix = assemble_feature_matrix(
        corpus, observations, ranks, site_ranks, manifest,
        FeatureModels(topic_labels=model.classify_many),
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest.write(out / "manifest.csv")
    write_matrix(out / "features.csv", matrix, labels, seed=args.seed)
    print(f"wrote {len(matrix.rows)} x {len(manifest)} feature matrix to {out}")
    return 0


def _cmd_train(args) -> int:
    manifest, matrix, labels, _ = _load_features(args)
    train, _, scaler, _ = _split_datasets(manifest, matrix, labels, args.ratio)
    train = upsample_positive(train, args.seed)
    model = train_gbdt(train, _train_config(args))
    _save_bundle(args.model, model, scaler, args.seed)
    losses = model.staged_losses()
    print(
        f"trained {args.trees} trees on {len(train)} rows "
        f"(final logloss {losses[-1]:.4f}); bundle at {args.model}"
    )
    return 0


def _cmd_evaluate(args) -> int:
    manifest, matrix, labels, _ = _load_features(args)
    model, _, seed = _load_bundle(args.model)
    if model.manifest_hash != manifest.content_hash():
        raise SchemaError("model bundle and manifest disagree")
    _, test, _, _ = _split_datasets(manifest, matrix, labels, args.ratio)
    probabilities = model.predict_proba(test)
    report = compute_metrics(test.labels, probabilities, args.cutoff, args.beta)
    auc = roc_auc(test.labels, probabilities) if 0 < sum(test.labels) < len(test.labels) else float("nan")
    headers = ["cutoff", "precision", "recall", "f1", f"f_{args.beta}", "auc"]
    rows = [[args.cutoff, report.precision, report.recall, report.f1, report.f_beta, auc]]
    print(render_table(headers, rows))
    if args.out:
        write_csv(args.out, headers, rows,
                  meta={"seed": seed, "manifest": manifest.content_hash()})
    return 0


def _cmd_sweep(args) -> int:
    manifest, matrix, labels, _ = _load_features(args)
    model, _, seed = _load_bundle(args.model)
    if model.manifest_hash != manifest.content_hash():
        raise SchemaError("model bundle and manifest disagree")
    _, test, _, _ = _split_datasets(manifest, matrix, labels, args.ratio)
    probabilities = model.predict_proba(test)
    sweep = sweep_cutoffs(test.labels, probabilities, args.beta)
    headers = ["cutoff", "precision", "recall", "f1", f"f_{args.beta}"]
    rows = [
        [cutoff, r.precision, r.recall, r.f1, r.f_beta]
        for cutoff, r in sweep.entries
    ]
    print(render_table(headers, rows))
    print(f"best F_{args.beta} cutoff: {sweep.best_cutoff}")
    if args.out:
        write_csv(args.out, headers, rows,
                  meta={"seed": seed, "manifest": manifest.content_hash(),
                        "best_cutoff": sweep.best_cutoff})
    return 0


def _cmd_ablate(args) -> int:
    manifest, matrix, labels, _ = _load_features(args)
    train, test, _, _ = _split_datasets(manifest, matrix, labels, args.ratio)
    train = upsample_positive(train, args.seed)
    from .learn import feature_importance

    full_model = train_gbdt(train, _train_config(args))
    full_probs = full_model.predict_proba(test)
    full = compute_metrics(test.labels, full_probs, args.cutoff, args.beta)
    ranked = feature_importance(full_model)
    top_names = [name for name, _ in ranked[: args.top_k]]
    train_k = train.select_features(top_names)
    test_k = test.select_features(top_names)
    topk_model = train_gbdt(train_k, _train_config(args))
    topk = compute_metrics(test_k.labels, topk_model.predict_proba(test_k),
                           args.cutoff, args.beta)
    retained = topk.f1 / full.f1 if full.f1 > 0 else 0.0
    headers = ["features", "precision", "recall", "f1", f"f_{args.beta}"]
    rows = [
        [len(manifest), full.precision, full.recall, full.f1, full.f_beta],
        [args.top_k, topk.precision, topk.recall, topk.f1, topk.f_beta],
    ]
    print(render_table(headers, rows))
    print(f"retained F1 ratio at k={args.top_k}: {retained:.4f}")
    if args.out:
        write_csv(args.out, headers, rows,
                  meta={"seed": args.seed, "manifest": manifest.content_hash(),
                        "retained_f1_ratio": f"{retained:.6f}"})
    return 0


def _cmd_series_a(args) -> int:
    corpus = load_corpus(args.fixtures)
    observations = build_observations(corpus, _prediction_dates(args.prediction_dates))
    model = _topic_model(args)
    result = series_a_experiment(
        corpus, observations, _train_config(args),
        FeatureModels(topic_labels=model.classify_many),
        cutoffs=tuple(args.cutoff), beta=args.beta, ratio=args.ratio,
    )
    headers = ["cutoff", "precision", "recall", f"f_{args.beta}", "f1"]
    rows = [
        [r["cutoff"], r["precision"], r["recall"], r["f_beta"], r["f1"]]
        for r in result["rows"]
    ]
    print(f"datapoints: {result['datapoints']} "
          f"(positive rate {result['positive_rate']:.3f})")
    print(render_table(headers, rows))
    if args.out:
        write_csv(args.out, headers, rows,
                  meta={"seed": args.seed,
                        "manifest": result["run"].manifest.content_hash(),
                        "datapoints": result["datapoints"]})
    return 0


def _cmd_predict(args) -> int:
    manifest = FeatureManifest.read(_manifest_path(args))
    model, scaler, seed = _load_bundle(args.model)
    if model.manifest_hash != manifest.content_hash():
        raise SchemaError(
            "model was trained against a different manifest; refusing to predict"
        )
    matrix, _, _ = read_matrix(args.features, manifest)
    rows = apply_minmax(scaler, manifest, list(matrix.rows))
    probabilities = model.predict_proba([list(r.values) for r in rows])
    headers = ["company_id", "prediction_date", "probability"]
    out_rows = [
        [r.company_id, r.prediction_date.isoformat(), float(p)]
        for r, p in zip(matrix.rows, probabilities)
    ]
    if args.out:
        write_csv(args.out, headers, out_rows,
                  meta={"seed": seed, "manifest": manifest.content_hash()})
        print(f"wrote {len(out_rows)} predictions to {args.out}")
    else:
        print(render_table(headers, out_rows))
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "featurize": _cmd_featurize,
    "train": _cmd_train,
    "evaluate": _cmd_evaluate,
    "sweep": _cmd_sweep,
    "ablate": _cmd_ablate,
    "series-a": _cmd_series_a,
    "predict": _cmd_predict,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FundcastError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
