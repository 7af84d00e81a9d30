"""Topic classifier: training, prediction rules, evaluation."""

import pytest

from fundcast import topics
from fundcast.errors import ConfigError, CorpusParseError, DegenerateTrainingError, EmptyCorpusError
from fundcast.learn import TrainConfig
from fundcast.topics import (
    TOPIC_LABELS,
    HeadlineExample,
    TopicModel,
    classify_headline,
    evaluate_topic_classifier,
    load_headlines,
    synthetic_headlines,
    train_topic_classifier,
    write_headlines,
)


def test_seven_labels():
    assert len(TOPIC_LABELS) == 7
    assert TOPIC_LABELS[0] == "funding_event"
    assert TOPIC_LABELS[-1] == "other"


def test_synthetic_corpus_separable(topic_model):
    heldout = synthetic_headlines(per_class=20, seed=99)
    report = evaluate_topic_classifier(topic_model, heldout)
    assert report["accuracy"] >= 0.95


def test_too_few_examples_rejected():
    with pytest.raises(ConfigError):
        train_topic_classifier(synthetic_headlines(per_class=1, seed=0)[:10])


def test_single_class_rejected():
    examples = [HeadlineExample(f"funding round number {i}", "funding_event") for i in range(60)]
    with pytest.raises(DegenerateTrainingError):
        train_topic_classifier(examples)


def test_retrain_same_seed_identical():
    examples = synthetic_headlines(per_class=15, seed=5)
    config = TrainConfig(tree_count=10, max_depth=2, learning_rate=0.3,
                         min_samples_leaf=2, seed=9)
    left = train_topic_classifier(examples, config)
    right = train_topic_classifier(examples, config)
    assert left.vocabulary == right.vocabulary
    assert left.priors == right.priors
    assert {k: b.to_dict() for k, b in left.boosters.items()} == {
        k: b.to_dict() for k, b in right.boosters.items()
    }


def test_marker_word_classified_to_planted_class(topic_model):
    for label in TOPIC_LABELS:
        markers = topics.MARKER_TERMS[label][:2]
        text = f"Acme {' '.join(markers)} today"
        assert classify_headline(topic_model, text) == label


def test_oov_only_text_goes_to_prior_argmax(topic_model):
    oov = "zzzz qqqq xxxx"
    expected = max(TOPIC_LABELS, key=lambda lab: topic_model.priors.get(lab, 0.0))
    assert classify_headline(topic_model, oov) == expected
    assert classify_headline(topic_model, "") == expected


def test_same_input_same_label(topic_model):
    text = "Acme raises a new funding round"
    assert classify_headline(topic_model, text) == classify_headline(topic_model, text)


def test_output_always_canonical(topic_model):
    texts = ["Acme wins award", "weird text zxq", "", "launches product beta"]
    for label in topic_model.classify_many(texts):
        assert label in TOPIC_LABELS


def test_evaluate_perfect_predictions(topic_model):
    heldout = synthetic_headlines(per_class=10, seed=123)
    report = evaluate_topic_classifier(topic_model, heldout)
    if report["accuracy"] == 1.0:
        for label in TOPIC_LABELS:
            entry = report["per_class"][label]
            assert entry["precision"] == 1.0 and entry["recall"] == 1.0 and entry["f1"] == 1.0


def test_all_other_predictor_macro_recall_one_seventh():
    constant = TopicModel(
        vocabulary={},
        priors={label: (1.0 if label == "other" else 0.0) for label in TOPIC_LABELS},
        boosters={},
        config=TrainConfig(),
    )
    heldout = synthetic_headlines(per_class=10, seed=41)
    report = evaluate_topic_classifier(constant, heldout)
    assert report["macro"]["recall"] == pytest.approx(1 / 7)


def test_empty_class_in_heldout_skipped(topic_model):
    heldout = [HeadlineExample("Acme raises funding round", "funding_event")] * 3
    report = evaluate_topic_classifier(topic_model, heldout)
    assert report["per_class"]["award"] is None
    assert report["per_class"]["funding_event"] is not None


def test_empty_heldout_rejected(topic_model):
    with pytest.raises(EmptyCorpusError):
        evaluate_topic_classifier(topic_model, [])


def test_headline_csv_round_trip(tmp_path):
    examples = synthetic_headlines(per_class=3, seed=2)
    path = tmp_path / "headlines.csv"
    write_headlines(examples, path)
    assert load_headlines(path) == examples


def test_headline_csv_bad_label(tmp_path):
    path = tmp_path / "headlines.csv"
    path.write_text("text,label\nhello,world\n", encoding="utf-8")
    with pytest.raises(CorpusParseError):
        load_headlines(path)
