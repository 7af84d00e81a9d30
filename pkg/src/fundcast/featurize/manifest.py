"""Canonical feature schema: 171 columns (161 numeric-or-text, 10 categorical).

The builder below is the single source of truth for column order. The
source tables name the feature families but not every column, so this
enumeration pins the schema; anything downstream (models, matrices,
reports) carries its hash and refuses to run against a different one.
"""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass
from pathlib import Path

from ..errors import SchemaError
from ..topics import TOPIC_LABELS

CATEGORIES = ("general", "funding", "news", "google", "twitter")
KINDS = ("numeric", "categorical", "text")

POS_TAG_NAMES = (
    "noun", "verb", "aux", "adj", "adv", "pron",
    "det", "adp", "num", "conj", "punct", "other",
)

NUMERIC_WIDTH = 161
CATEGORICAL_WIDTH = 10
TOTAL_WIDTH = NUMERIC_WIDTH + CATEGORICAL_WIDTH


@dataclass(frozen=True)
class FeatureDescriptor:
    name: str
    category: str
    kind: str


class FeatureManifest:
    def __init__(self, features: list[FeatureDescriptor]):
        names = [f.name for f in features]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate feature names in manifest")
        for f in features:
            if f.category not in CATEGORIES:
                raise SchemaError(f"unknown category {f.category!r}")
            if f.kind not in KINDS:
                raise SchemaError(f"unknown kind {f.kind!r}")
        self.features = tuple(features)
        self.names = names
        self.kinds = [f.kind for f in features]
        self.categories = [f.category for f in features]
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.features)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SchemaError(f"unknown feature {name!r}") from None

    def numeric_indices(self) -> list[int]:
        return [i for i, kind in enumerate(self.kinds) if kind == "numeric"]

    def categorical_indices(self) -> list[int]:
        return [i for i, kind in enumerate(self.kinds) if kind == "categorical"]

    def text_indices(self) -> list[int]:
        return [i for i, kind in enumerate(self.kinds) if kind == "text"]

    def select(self, names) -> "FeatureManifest":
        """Sub-manifest containing ``names``, keeping canonical order."""
        wanted = set(names)
        missing = wanted - set(self.names)
        if missing:
            raise SchemaError(f"unknown features: {sorted(missing)}")
        return FeatureManifest([f for f in self.features if f.name in wanted])

    def content_hash(self) -> str:
        digest = hashlib.sha256()
        for i, f in enumerate(self.features):
            digest.update(f"{i},{f.name},{f.category},{f.kind}\n".encode())
        return digest.hexdigest()

    def write(self, path: str | Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(["index", "name", "category", "kind"])
            for i, f in enumerate(self.features):
                writer.writerow([i, f.name, f.category, f.kind])

    @classmethod
    def read(cls, path: str | Path) -> "FeatureManifest":
        features = []
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            for row in reader:
                features.append(
                    FeatureDescriptor(row["name"], row["category"], row["kind"])
                )
        return cls(features)


def _topic_block(prefix: str, category: str) -> list[FeatureDescriptor]:
    block = [
        FeatureDescriptor(f"{prefix}_topic_count_{label}", category, "numeric")
        for label in TOPIC_LABELS
    ]
    block += [
        FeatureDescriptor(f"{prefix}_topic_fraction_{label}", category, "numeric")
        for label in TOPIC_LABELS
    ]
    return block


def build_manifest() -> FeatureManifest:
    f: list[FeatureDescriptor] = []

    # -- general ------------------------------------------------------------
    f.append(FeatureDescriptor("general_description", "general", "text"))
    for name in (
        "general_age_months", "general_founder_count", "general_industry_count",
        "general_name_length", "general_website_url_length",
        "general_social_account_count",
    ):
        f.append(FeatureDescriptor(name, "general", "numeric"))
    for name in (
        "general_country", "general_state", "general_hub_ca", "general_hub_ny",
        "general_hub_tx", "general_hub_other", "general_status",
        "general_primary_industry", "general_dominant_topic",
    ):
        f.append(FeatureDescriptor(name, "general", "categorical"))

    # -- funding ------------------------------------------------------------
    for name in (
        "funding_round_count", "funding_last_amount_usd",
        "funding_months_since_last_round", "funding_total_investments",
        "funding_distinct_investor_count", "funding_investor_repeat_ratio",
        "funding_total_raised_usd", "funding_mean_round_amount_usd",
        "funding_months_since_first_round", "funding_rounds_per_year",
    ):
        f.append(FeatureDescriptor(name, "funding", "numeric"))
    f.append(FeatureDescriptor("funding_last_stage", "funding", "categorical"))

    # -- news ---------------------------------------------------------------
    for name in (
        "news_article_count", "news_top10_publisher_count",
        "news_top10_publisher_fraction", "news_top50_publisher_count",
        "news_top50_publisher_fraction",
    ):
        f.append(FeatureDescriptor(name, "news", "numeric"))
    f.extend(_topic_block("news", "news"))

    # -- google -------------------------------------------------------------
    for name in (
        "google_total_results", "google_own_link_count",
        "google_top10_publisher_site_count", "google_top50_publisher_site_count",
        "google_top10_site_count", "google_top50_site_count",
    ):
        f.append(FeatureDescriptor(name, "google", "numeric"))
    f.extend(_topic_block("google", "google"))

    # -- twitter ------------------------------------------------------------
    for name in (
        "twitter_tweet_count", "twitter_company_tweet_count",
        "twitter_company_tweet_fraction", "twitter_unique_user_count",
        "twitter_distinct_language_count", "twitter_recent_scored_sentiment_mean",
    ):
        f.append(FeatureDescriptor(name, "twitter", "numeric"))
    f.extend(_topic_block("twitter", "twitter"))
    for metric in ("like", "retweet", "reply", "quote"):
        for agg in ("mean", "total", "max", "std"):
            f.append(FeatureDescriptor(f"twitter_{metric}_{agg}", "twitter", "numeric"))
    for flag in ("contains_website", "mentions_account", "reply_to_company"):
        f.append(FeatureDescriptor(f"twitter_{flag}_fraction", "twitter", "numeric"))
        f.append(FeatureDescriptor(f"twitter_{flag}_count", "twitter", "numeric"))
    for metric in ("hashtag", "mention", "link", "emoji"):
        for agg in ("mean", "total", "max"):
            f.append(FeatureDescriptor(f"twitter_{metric}_{agg}", "twitter", "numeric"))
    for agg in ("mean", "std", "min", "max"):
        f.append(FeatureDescriptor(f"twitter_sentiment_{agg}", "twitter", "numeric"))
    for metric in ("character", "token", "word", "sentence", "punctuation", "shape"):
        for agg in ("mean", "total", "max"):
            f.append(FeatureDescriptor(f"twitter_{metric}_{agg}", "twitter", "numeric"))
    for metric in ("passive", "syllable", "long_word", "complex_word"):
        for agg in ("mean", "total"):
            f.append(FeatureDescriptor(f"twitter_{metric}_{agg}", "twitter", "numeric"))
    for tag in POS_TAG_NAMES:
        f.append(FeatureDescriptor(f"twitter_pos_{tag}_mean", "twitter", "numeric"))
    for name in (
        "twitter_flesch_mean", "twitter_flesch_min",
        "twitter_syllables_per_word_mean", "twitter_long_word_fraction_mean",
        "twitter_complex_word_fraction_mean",
    ):
        f.append(FeatureDescriptor(name, "twitter", "numeric"))
    for name in (
        "twitter_engagement_total", "twitter_engagement_per_tweet_mean",
        "twitter_tweets_per_month", "twitter_active_month_count",
    ):
        f.append(FeatureDescriptor(name, "twitter", "numeric"))

    manifest = FeatureManifest(f)
    numeric_like = len(manifest.numeric_indices()) + len(manifest.text_indices())
    categorical = len(manifest.categorical_indices())
    if numeric_like != NUMERIC_WIDTH or categorical != CATEGORICAL_WIDTH:
        raise SchemaError(
            f"manifest width drifted: {numeric_like} numeric-or-text "
            f"(want {NUMERIC_WIDTH}), {categorical} categorical (want {CATEGORICAL_WIDTH})"
        )
    return manifest
