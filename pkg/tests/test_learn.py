"""Ordered encodings, the boosted-tree learner, baselines, serialization."""

import math
import random

import numpy as np
import pytest

from fundcast.errors import ConfigError, DegenerateTrainingError, SchemaError
from fundcast.featurize import FeatureDescriptor, FeatureManifest
from fundcast.learn import (
    BoostedTrees,
    Dataset,
    TrainConfig,
    category_statistics,
    encode_with_statistics,
    feature_importance,
    ordered_target_encode,
    ordered_text_encode,
    train_baseline,
    train_gbdt,
)
from fundcast.evaluate import roc_auc


# ----------------------------------------------------------- ordered encode

def test_first_occurrence_gets_running_mean():
    # identity permutation; position 2 has running mean (1+0)/2 = 0.5 and an
    # empty category history, so the smoothed prior alone comes through
    values = ["a", "a", "b"]
    labels = [1, 0, 1]
    out = ordered_target_encode(values, labels, [0, 1, 2], prior_weight=1.0)
    assert out[2] == pytest.approx(0.5)
    assert out[0] == pytest.approx(0.5)  # no history at all -> 0.5 prior


def test_category_seen_twice_hand_case():
    # category history {1, 0}, prior weight 1, running mean 0.5:
    # (1 + 0.5) / (2 + 1) = 0.5
    values = ["a", "a", "a"]
    labels = [1, 0, 0]
    out = ordered_target_encode(values, labels, [0, 1, 2], prior_weight=1.0)
    assert out[2] == pytest.approx((1 + 1.0 * 0.5) / (2 + 1.0))


def test_unseen_category_at_prediction_gets_global_mean():
    values = ["a", "b", "a", "b"]
    labels = [1, 0, 1, 0]
    stats, mean = category_statistics(values, labels)
    encoded = encode_with_statistics(["zzz"], stats, mean, prior_weight=1.0)
    assert encoded[0] == pytest.approx(mean)


def test_ordered_encode_no_leakage_from_later_labels():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(3, 30)
        values = [rng.choice("abcd") for _ in range(n)]
        labels = [rng.randint(0, 1) for _ in range(n)]
        perm = list(range(n))
        rng.shuffle(perm)
        cut = rng.randrange(1, n)
        position_of = {row: pos for pos, row in enumerate(perm)}
        mutated = list(labels)
        for row in range(n):
            if position_of[row] >= cut:
                mutated[row] = 1 - mutated[row]
        base = ordered_target_encode(values, labels, perm)
        changed = ordered_target_encode(values, mutated, perm)
        for row in range(n):
            if position_of[row] <= cut:
                assert base[row] == changed[row]


def test_text_encode_empty_text_gets_running_mean():
    out = ordered_text_encode(["alpha beta", "", "alpha"], [1, 0, 1], [0, 1, 2])
    assert out[1] == pytest.approx(1.0)  # running mean after one positive row


def test_text_encode_positive_history_pulls_up():
    # rows 0/1 share token "growth" with labels 1,1; row 2 mentions it too
    texts = ["growth", "growth", "growth", "plain"]
    labels = [1, 1, 0, 0]
    out = ordered_text_encode(texts, labels, [0, 1, 2, 3], prior_weight=1.0)
    running_mean_at_2 = 1.0  # labels before position 2 are {1, 1}
    expected = (2 + 1.0 * running_mean_at_2) / (2 + 1.0)
    assert out[2] == pytest.approx(expected)
    assert out[2] > 0.5


def test_text_encode_identical_texts_identical_history_identical_scores():
    texts = ["same words here", "same words here"]
    out = ordered_text_encode(texts, [1, 1], [0, 1])
    out2 = ordered_text_encode(texts, [1, 1], [0, 1])
    assert out.tolist() == out2.tolist()


# ------------------------------------------------------------------- config

def test_tree_count_zero_rejected():
    with pytest.raises(ConfigError):
        TrainConfig(tree_count=0).validate()


def test_learning_rate_bounds():
    with pytest.raises(ConfigError):
        TrainConfig(learning_rate=0.0).validate()
    with pytest.raises(ConfigError):
        TrainConfig(learning_rate=1.5).validate()


# ----------------------------------------------------------------- boosting

def _separable_arrays(n=200, seed=5):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, 2))
    y = (x[:, 0] + 0.5 * x[:, 1] > 0).astype(float)
    return x, y


def test_separable_training_logloss_under_point_one():
    x, y = _separable_arrays()
    booster = BoostedTrees().fit(
        x, y, TrainConfig(tree_count=100, max_depth=3, min_samples_leaf=2)
    )
    assert booster.staged_losses[-1] < 0.1


def test_training_loss_non_increasing():
    x, y = _separable_arrays(n=150, seed=8)
    booster = BoostedTrees().fit(x, y, TrainConfig(tree_count=60, max_depth=3))
    losses = booster.staged_losses
    assert all(a >= b - 1e-12 for a, b in zip(losses, losses[1:]))


def test_probabilities_open_interval():
    x, y = _separable_arrays(n=100, seed=2)
    booster = BoostedTrees().fit(x, y, TrainConfig(tree_count=40, max_depth=3))
    p = booster.predict_proba(np.vstack([x, 100 * x, -100 * x]))
    assert np.all(p > 0) and np.all(p < 1)


def test_empty_ensemble_balanced_base_score_is_half():
    booster = BoostedTrees(base_score=0.0, trees=[], feature_count=2)
    p = booster.predict_proba(np.zeros((3, 2)))
    assert np.allclose(p, 0.5)


def test_single_class_rejected():
    x = np.zeros((10, 2))
    with pytest.raises(DegenerateTrainingError):
        BoostedTrees().fit(x, np.ones(10), TrainConfig(tree_count=5))


# ------------------------------------------------------------- full model

def _toy_manifest():
    return FeatureManifest([
        FeatureDescriptor("num_a", "general", "numeric"),
        FeatureDescriptor("num_b", "general", "numeric"),
        FeatureDescriptor("city", "general", "categorical"),
        FeatureDescriptor("blurb", "general", "text"),
    ])


def _toy_dataset(n=120, seed=4):
    rng = random.Random(seed)
    manifest = _toy_manifest()
    rows, labels = [], []
    for _ in range(n):
        label = rng.randint(0, 1)
        num_a = rng.gauss(1.0 if label else -1.0, 0.6)
        num_b = rng.gauss(0.0, 1.0)
        city = rng.choice(["sf", "nyc"] if label else ["austin", "berlin", "sf"])
        blurb = "rapid growth scaling" if (label and rng.random() < 0.8) else "steady tooling team"
        rows.append([num_a, num_b, city, blurb])
        labels.append(label)
    return Dataset(manifest=manifest, rows=rows, labels=labels)


def test_train_gbdt_deterministic_serialization():
    data = _toy_dataset()
    config = TrainConfig(tree_count=25, max_depth=3, seed=11)
    left = train_gbdt(data, config)
    right = train_gbdt(data, config)
    assert left.to_dict() == right.to_dict()


def test_predict_proba_deterministic_and_bounded():
    data = _toy_dataset()
    model = train_gbdt(data, TrainConfig(tree_count=25, max_depth=3, seed=11))
    p1 = model.predict_proba(data)
    p2 = model.predict_proba(data)
    assert np.array_equal(p1, p2)
    assert np.all((p1 > 0) & (p1 < 1))


def test_model_save_load_round_trip(tmp_path):
    data = _toy_dataset()
    model = train_gbdt(data, TrainConfig(tree_count=10, max_depth=2, seed=1))
    path = tmp_path / "model.json"
    model.save(path)
    from fundcast.learn import GbdtModel

    loaded = GbdtModel.load(path)
    assert np.array_equal(loaded.predict_proba(data), model.predict_proba(data))
    assert loaded.to_dict() == model.to_dict()


def test_manifest_hash_mismatch_refused():
    data = _toy_dataset()
    model = train_gbdt(data, TrainConfig(tree_count=5, max_depth=2, seed=1))
    other = FeatureManifest([
        FeatureDescriptor("num_a", "general", "numeric"),
        FeatureDescriptor("num_b", "general", "numeric"),
        FeatureDescriptor("city", "general", "categorical"),
        FeatureDescriptor("blurb_renamed", "general", "text"),
    ])
    clone = Dataset(manifest=other, rows=data.rows, labels=data.labels)
    with pytest.raises(SchemaError):
        model.predict_proba(clone)


def test_gbdt_and_baselines_accept_same_dataset():
    data = _toy_dataset()
    model = train_gbdt(data, TrainConfig(tree_count=10, max_depth=2, seed=1))
    baseline = train_baseline("logistic_regression", data, TrainConfig(seed=1))
    assert len(model.predict_proba(data)) == len(baseline.predict_proba(data))


# --------------------------------------------------------------- importance

def test_importance_informative_feature_dominates():
    rng = random.Random(9)
    manifest = FeatureManifest([
        FeatureDescriptor("signal", "general", "numeric"),
        FeatureDescriptor("noise", "general", "numeric"),
    ])
    rows, labels = [], []
    for _ in range(300):
        label = rng.randint(0, 1)
        rows.append([rng.gauss(2.0 * label, 0.5), rng.gauss(0, 1)])
        labels.append(label)
    data = Dataset(manifest=manifest, rows=rows, labels=labels)
    model = train_gbdt(data, TrainConfig(tree_count=30, max_depth=3, seed=2))
    ranked = dict(feature_importance(model))
    assert ranked["signal"] > 0.8
    assert sum(ranked.values()) == pytest.approx(1.0, abs=1e-9)


def test_importance_unused_feature_zero():
    manifest = FeatureManifest([
        FeatureDescriptor("signal", "general", "numeric"),
        FeatureDescriptor("constant", "general", "numeric"),
    ])
    rng = random.Random(3)
    rows = [[rng.gauss(2.0 * (i % 2), 0.4), 7.0] for i in range(200)]
    labels = [i % 2 for i in range(200)]
    data = Dataset(manifest=manifest, rows=rows, labels=labels)
    model = train_gbdt(data, TrainConfig(tree_count=15, max_depth=2, seed=2))
    ranked = dict(feature_importance(model))
    assert ranked["constant"] == 0.0


# ---------------------------------------------------------------- baselines

def _blob_dataset(n=300, seed=17):
    rng = np.random.default_rng(seed)
    manifest = FeatureManifest([
        FeatureDescriptor("x0", "general", "numeric"),
        FeatureDescriptor("x1", "general", "numeric"),
    ])
    labels = rng.integers(0, 2, size=n)
    x = rng.normal(size=(n, 2)) + 3.0 * labels[:, None]
    rows = [list(map(float, row)) for row in x]
    return Dataset(manifest=manifest, rows=rows, labels=[int(v) for v in labels])


def test_naive_bayes_on_gaussian_blobs():
    data = _blob_dataset()
    model = train_baseline("naive_bayes", data, TrainConfig(seed=0))
    predictions = (model.predict_proba(data) >= 0.5).astype(int)
    accuracy = float(np.mean(predictions == np.asarray(data.labels)))
    assert accuracy > 0.9


def test_knn_one_neighbor_memorizes_training():
    data = _blob_dataset(n=80, seed=4)
    model = train_baseline("knn", data, TrainConfig(seed=0, knn_neighbors=1))
    predictions = (model.predict_proba(data) >= 0.5).astype(int)
    assert float(np.mean(predictions == np.asarray(data.labels))) == 1.0


def test_logistic_regression_heldout_auc():
    train = _blob_dataset(n=300, seed=1)
    test = _blob_dataset(n=150, seed=2)
    model = train_baseline("logistic_regression", train, TrainConfig(seed=0))
    assert roc_auc(test.labels, model.predict_proba(test)) > 0.95


def test_unknown_baseline_kind():
    with pytest.raises(ConfigError):
        train_baseline("svm_rbf", _blob_dataset(n=60), TrainConfig(seed=0))


@pytest.mark.parametrize(
    "kind",
    ["logistic_regression", "naive_bayes", "knn", "decision_tree",
     "random_forest", "gradient_boost_plain"],
)
def test_every_baseline_exposes_probabilities(kind):
    data = _blob_dataset(n=120, seed=6)
    model = train_baseline(kind, data, TrainConfig(seed=0, tree_count=30))
    p = model.predict_proba(data)
    assert p.shape == (120,)
    assert np.all((p >= 0) & (p <= 1))


# --------------------------------------------------------------- loss maths

def test_logloss_matches_hand_formula():
    from fundcast.learn import logloss

    labels = np.array([1.0, 0.0])
    probs = np.array([0.8, 0.3])
    expected = -(math.log(0.8) + math.log(0.7)) / 2
    assert logloss(labels, probs) == pytest.approx(expected, abs=1e-12)
