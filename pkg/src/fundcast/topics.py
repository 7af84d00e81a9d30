"""Milestone topic classification for headlines, tweets, and result titles.

Six milestone topics plus "other"; a term-frequency bag (unigrams +
bigrams, document-frequency floor 2) feeds one-vs-rest boosted trees from
the learn package. The hand-labeled headline dataset is proprietary, so the
loader reads its schema and a synthetic generator with per-class marker
vocabulary stands in for tests and demos.
"""

from __future__ import annotations

import csv
import random
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, CorpusParseError, DegenerateTrainingError, EmptyCorpusError
from .learn import BoostedTrees, TrainConfig

TOPIC_LABELS = (
    "funding_event",
    "merger_acquisition",
    "geo_expansion",
    "product_launch",
    "award",
    "management_change",
    "other",
)

MIN_EXAMPLES = 50
DF_FLOOR = 2

TOPIC_TRAIN_DEFAULTS = TrainConfig(
    tree_count=40, max_depth=2, learning_rate=0.3, min_samples_leaf=2
)

_TOKEN = re.compile(r"[a-z0-9']+")

MARKER_TERMS: dict[str, tuple[str, ...]] = {
    "funding_event": (
        "raises", "funding", "round", "series", "million", "investors",
        "capital", "seed", "valuation", "backing",
    ),
    "merger_acquisition": (
        "acquires", "acquisition", "merger", "merges", "buyout", "acquired",
        "takeover", "consolidation",
    ),
    "geo_expansion": (
        "expands", "expansion", "opens", "office", "enters", "overseas",
        "region", "international", "footprint",
    ),
    "product_launch": (
        "launches", "launch", "unveils", "releases", "debuts", "product",
        "platform", "beta", "rollout",
    ),
    "award": (
        "wins", "award", "awarded", "prize", "honored", "recognized",
        "winner", "medal", "accolade",
    ),
    "management_change": (
        "appoints", "hires", "ceo", "cto", "cfo", "joins", "resigns",
        "promotes", "executive", "chief",
    ),
    "other": (
        "weekly", "report", "story", "notes", "podcast", "interview",
        "review", "roundup", "digest",
    ),
}

_FILLER_TERMS = (
    "the", "for", "a", "to", "new", "with", "this", "today", "company",
    "startup", "tech", "team", "news", "update", "announces", "market",
)

_COMPANY_STEMS = (
    "Acme", "Nimbus", "Quanta", "Vertex", "Lumen", "Orbital", "Zephyr",
    "Crestline", "Atlas", "Northbeam", "Bluefin", "Helix",
)


@dataclass(frozen=True)
class HeadlineExample:
    text: str
    label: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("headline text must be non-empty")
        if self.label not in TOPIC_LABELS:
            raise ValueError(f"unknown topic label {self.label!r}")


def load_headlines(path: str | Path) -> list[HeadlineExample]:
    """Read the labeled-headline CSV (columns: text,label)."""
    examples = []
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != ["text", "label"]:
            raise CorpusParseError(f"unexpected header {reader.fieldnames!r}", path, 1)
        for line, row in enumerate(reader, start=2):
            if not row["text"] or row["label"] not in TOPIC_LABELS:
                raise CorpusParseError("bad headline row", path, line)
            examples.append(HeadlineExample(text=row["text"], label=row["label"]))
    return examples


def write_headlines(examples, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["text", "label"])
        for example in examples:
            writer.writerow([example.text, example.label])


# ------------------------------------------------------------ vectorization

def _terms(text: str) -> list[str]:
    unigrams = _TOKEN.findall(text.lower())
    bigrams = [f"{a} {b}" for a, b in zip(unigrams, unigrams[1:])]
    return unigrams + bigrams


def _build_vocabulary(texts) -> dict[str, int]:
    document_frequency: dict[str, int] = {}
    for text in texts:
        for term in set(_terms(text)):
            document_frequency[term] = document_frequency.get(term, 0) + 1
    kept = sorted(t for t, df in document_frequency.items() if df >= DF_FLOOR)
    return {term: i for i, term in enumerate(kept)}


def _vectorize(texts, vocabulary: dict[str, int]) -> np.ndarray:
    matrix = np.zeros((len(texts), len(vocabulary)), dtype=float)
    for row, text in enumerate(texts):
        for term in _terms(text):
            col = vocabulary.get(term)
            if col is not None:
                matrix[row, col] += 1.0
    return matrix


# ------------------------------------------------------------------- model

@dataclass
class TopicModel:
    vocabulary: dict[str, int]
    priors: dict[str, float]
    boosters: dict[str, BoostedTrees]
    config: TrainConfig

    def _prior_argmax(self) -> str:
        return max(TOPIC_LABELS, key=lambda label: self.priors.get(label, 0.0))

    def classify_many(self, texts) -> list[str]:
        if not texts:
            return []
        matrix = _vectorize(texts, self.vocabulary)
        scores = np.zeros((len(texts), len(TOPIC_LABELS)))
        for j, label in enumerate(TOPIC_LABELS):
            booster = self.boosters.get(label)
            if booster is None:
                scores[:, j] = self.priors.get(label, 0.0)
            else:
                scores[:, j] = booster.predict_proba(matrix)
        known = matrix.sum(axis=1) > 0
        fallback = self._prior_argmax()
        labels = []
        for i in range(len(texts)):
            if not known[i]:
                labels.append(fallback)
            else:
                labels.append(TOPIC_LABELS[int(np.argmax(scores[i]))])
        return labels


def train_topic_classifier(examples, config: TrainConfig | None = None) -> TopicModel:
    """One-vs-rest boosted trees over term frequencies; deterministic per seed."""
    if len(examples) < MIN_EXAMPLES:
        raise ConfigError(
            f"need at least {MIN_EXAMPLES} labeled headlines, got {len(examples)}"
        )
    labels_present = {example.label for example in examples}
    if len(labels_present) < 2:
        raise DegenerateTrainingError("headline corpus contains a single label")
    config = (config or TOPIC_TRAIN_DEFAULTS).validate()
    texts = [example.text for example in examples]
    vocabulary = _build_vocabulary(texts)
    matrix = _vectorize(texts, vocabulary)
    total = len(examples)
    priors = {
        label: sum(1 for e in examples if e.label == label) / total
        for label in TOPIC_LABELS
    }
    boosters: dict[str, BoostedTrees] = {}
    for label in TOPIC_LABELS:
        y = np.array([1.0 if e.label == label else 0.0 for e in examples])
        if y.sum() == 0 or y.sum() == total:
            continue  # scored by prior alone
        boosters[label] = BoostedTrees().fit(matrix, y, config)
    return TopicModel(vocabulary=vocabulary, priors=priors, boosters=boosters, config=config)


def classify_headline(model: TopicModel, text: str) -> str:
    return model.classify_many([text])[0]


def evaluate_topic_classifier(model: TopicModel, heldout) -> dict:
    """Per-class precision/recall/F1 plus macro averages over present classes."""
    if not heldout:
        raise EmptyCorpusError("held-out set is empty")
    golds = [example.label for example in heldout]
    predictions = model.classify_many([example.text for example in heldout])
    report: dict = {"per_class": {}, "macro": {}}
    tracked = []
    for label in TOPIC_LABELS:
        support = sum(1 for g in golds if g == label)
        if support == 0:
            report["per_class"][label] = None
            continue
        tp = sum(1 for g, p in zip(golds, predictions) if g == label and p == label)
        fp = sum(1 for g, p in zip(golds, predictions) if g != label and p == label)
        fn = support - tp
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        entry = {"precision": precision, "recall": recall, "f1": f1, "support": support}
        report["per_class"][label] = entry
        tracked.append(entry)
    report["macro"] = {
        metric: sum(entry[metric] for entry in tracked) / len(tracked)
        for metric in ("precision", "recall", "f1")
    }
    report["accuracy"] = sum(1 for g, p in zip(golds, predictions) if g == p) / len(golds)
    return report


# --------------------------------------------------------------- synthetic

def compose_headline(rng: random.Random, label: str, company: str | None = None) -> str:
    """A headline whose vocabulary marks its class."""
    company = company or rng.choice(_COMPANY_STEMS)
    markers = MARKER_TERMS[label]
    chosen = rng.sample(markers, k=min(2, len(markers)))
    filler = rng.sample(_FILLER_TERMS, k=rng.randint(2, 4))
    words = [company, *chosen, *filler]
    tail = words[1:]
    rng.shuffle(tail)
    return " ".join([words[0], *tail])


def synthetic_headlines(per_class: int, seed: int) -> list[HeadlineExample]:
    """A separable labeled corpus: per_class examples for each topic."""
    rng = random.Random(seed)
    examples = []
    for label in TOPIC_LABELS:
        for _ in range(per_class):
            examples.append(HeadlineExample(text=compose_headline(rng, label), label=label))
    return examples
