"""Turn windowed views into manifest-aligned feature rows.

Every extractor returns a plain ``{feature_name: value}`` dict; assemble
stitches them into FeatureVectors in manifest order. Numeric features are
floats, categorical features are strings, and the description column stays
raw text for the ordered token encoder downstream.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..dates import months_between
from ..errors import InvalidObservationError
from ..ingest.types import CompanyRecord, Corpus, ObservationPoint, SearchResponse, WindowedView
from ..ingest.windows import TWEET_WINDOW_MONTHS, apply_time_window
from ..textfeat import (
    LexiconScorer,
    PosTag,
    TextScorer,
    distinct_language_count,
    passive_voice_count,
    pos_distribution,
    readability_stats,
    sentiment_compound,
    shape_signature_count,
    surface_counts,
    tokenize,
)
from .manifest import TOPIC_LABELS, FeatureManifest
from .publishers import PublisherRank, SiteRank, normalize_publisher, registrable_domain, url_path

RECENT_SCORED_TWEETS = 100  # scorer sentiment covers this many most recent tweets

TopicLabeler = Callable[[Sequence[str]], list[str]]


@dataclass
class FeatureModels:
    """Model hooks used during extraction: a batch topic labeler and a
    pluggable text scorer (defaults to the lexicon scorer)."""

    topic_labels: TopicLabeler | None = None
    scorer: TextScorer = field(default_factory=LexiconScorer)


@dataclass(frozen=True)
class FeatureVector:
    company_id: str
    prediction_date: dt.date
    values: tuple
    mask: tuple  # True where the source was missing and a default was used


@dataclass(frozen=True)
class FeatureMatrix:
    manifest: FeatureManifest
    rows: tuple[FeatureVector, ...]


def _bool_cat(value: bool) -> str:
    return "true" if value else "false"


def _zero_topic_block(prefix: str) -> dict:
    block = {}
    for label in TOPIC_LABELS:
        block[f"{prefix}_topic_count_{label}"] = 0.0
        block[f"{prefix}_topic_fraction_{label}"] = 0.0
    return block


def _topic_block(prefix: str, labels: list[str]) -> dict:
    block = _zero_topic_block(prefix)
    for label in labels:
        block[f"{prefix}_topic_count_{label}"] += 1.0
    total = float(len(labels))
    if total:
        for label in TOPIC_LABELS:
            block[f"{prefix}_topic_fraction_{label}"] = (
                block[f"{prefix}_topic_count_{label}"] / total
            )
    return block


# ----------------------------------------------------------------- general

def general_features(company: CompanyRecord, obs: ObservationPoint) -> dict:
    age_months = months_between(company.founded_on, obs.prediction_date)
    if age_months < 0:
        raise InvalidObservationError(
            f"{company.company_id} founded {company.founded_on} after "
            f"observation {obs.prediction_date}"
        )
    social = sum(
        1 for handle in (company.twitter_handle, company.facebook_handle, company.linkedin_handle)
        if handle
    )
    return {
        "general_description": company.description,
        "general_age_months": float(age_months),
        "general_founder_count": float(company.founder_count),
        "general_industry_count": float(len(company.industries)),
        "general_name_length": float(len(company.name)),
        "general_website_url_length": float(len(company.website_url or "")),
        "general_social_account_count": float(social),
        "general_country": company.country or "none",
        "general_state": company.state or "none",
        "general_hub_ca": _bool_cat(company.hq_hub_ca),
        "general_hub_ny": _bool_cat(company.hq_hub_ny),
        "general_hub_tx": _bool_cat(company.hq_hub_tx),
        "general_hub_other": _bool_cat(company.hq_hub_other),
        "general_status": company.status,
        "general_primary_industry": company.industries[0] if company.industries else "none",
    }


# ----------------------------------------------------------------- funding

def funding_features(rounds, obs: ObservationPoint, company: CompanyRecord) -> dict:
    count = len(rounds)
    if count == 0:
        return {
            "funding_round_count": 0.0,
            "funding_last_amount_usd": 0.0,
            "funding_months_since_last_round": 0.0,
            "funding_total_investments": 0.0,
            "funding_distinct_investor_count": 0.0,
            "funding_investor_repeat_ratio": 0.0,
            "funding_total_raised_usd": 0.0,
            "funding_mean_round_amount_usd": 0.0,
            "funding_months_since_first_round": 0.0,
            "funding_rounds_per_year": 0.0,
            "funding_last_stage": "none",
        }
    ordered = sorted(rounds, key=lambda r: r.announced_on)
    last = ordered[-1]
    total_investments = sum(len(r.investor_ids) for r in ordered)
    distinct = len({inv for r in ordered for inv in r.investor_ids})
    amounts = [r.amount_usd for r in ordered if r.amount_usd is not None]
    total_raised = float(sum(amounts))
    age_months = max(months_between(company.founded_on, obs.prediction_date), 0)
    return {
        "funding_round_count": float(count),
        "funding_last_amount_usd": float(last.amount_usd or 0.0),
        "funding_months_since_last_round": float(
            months_between(last.announced_on, obs.prediction_date)
        ),
        "funding_total_investments": float(total_investments),
        "funding_distinct_investor_count": float(distinct),
        "funding_investor_repeat_ratio": (
            distinct / total_investments if total_investments else 0.0
        ),
        "funding_total_raised_usd": total_raised,
        "funding_mean_round_amount_usd": total_raised / len(amounts) if amounts else 0.0,
        "funding_months_since_first_round": float(
            months_between(ordered[0].announced_on, obs.prediction_date)
        ),
        "funding_rounds_per_year": (count * 12.0 / age_months) if age_months > 0 else 0.0,
        "funding_last_stage": last.stage,
    }


# -------------------------------------------------------------------- news

def news_features(press, ranks: PublisherRank, topics: list[str]) -> dict:
    count = len(press)
    top10 = sum(1 for p in press if p.publisher in ranks.top10)
    top50 = sum(1 for p in press if p.publisher in ranks.top50)
    row = {
        "news_article_count": float(count),
        "news_top10_publisher_count": float(top10),
        "news_top10_publisher_fraction": top10 / count if count else 0.0,
        "news_top50_publisher_count": float(top50),
        "news_top50_publisher_fraction": top50 / count if count else 0.0,
    }
    row.update(_topic_block("news", topics))
    return row


# ------------------------------------------------------------------ google

def _own_link(link: str, company: CompanyRecord) -> bool:
    host = registrable_domain(link)
    path = url_path(link)
    if company.website_url and host == registrable_domain(company.website_url):
        return True
    social = {
        "twitter.com": company.twitter_handle,
        "x.com": company.twitter_handle,
        "facebook.com": company.facebook_handle,
    }
    handle = social.get(host)
    if handle and path.startswith(handle.lower()):
        return True
    if host == "linkedin.com" and company.linkedin_handle:
        wanted = company.linkedin_handle.lower()
        return path.startswith(f"company/{wanted}") or path.startswith(f"in/{wanted}")
    return False


def google_features(search: SearchResponse | None, company: CompanyRecord,
                    ranks: PublisherRank, site_ranks: SiteRank,
                    topics: list[str]) -> dict:
    if search is None:
        row = {
            "google_total_results": 0.0,
            "google_own_link_count": 0.0,
            "google_top10_publisher_site_count": 0.0,
            "google_top50_publisher_site_count": 0.0,
            "google_top10_site_count": 0.0,
            "google_top50_site_count": 0.0,
        }
        row.update(_zero_topic_block("google"))
        return row
    top10_pub_names = {normalize_publisher(p) for p in ranks.top10}
    top50_pub_names = {normalize_publisher(p) for p in ranks.top50}
    own = top10_pub = top50_pub = top10_site = top50_site = 0
    for item in search.items:
        host = registrable_domain(item.link)
        label = host.split(".")[0] if host else ""
        own += _own_link(item.link, company)
        top10_pub += label in top10_pub_names
        top50_pub += label in top50_pub_names
        top10_site += host in site_ranks.top10
        top50_site += host in site_ranks.top50
    row = {
        "google_total_results": float(search.total_results),
        "google_own_link_count": float(own),
        "google_top10_publisher_site_count": float(top10_pub),
        "google_top50_publisher_site_count": float(top50_pub),
        "google_top10_site_count": float(top10_site),
        "google_top50_site_count": float(top50_site),
    }
    row.update(_topic_block("google", topics))
    return row


# ----------------------------------------------------------------- twitter

_COUNT_METRICS_4AGG = ("like", "retweet", "reply", "quote")
_SURFACE_METRICS = ("hashtag", "mention", "link", "emoji")
_STRUCTURE_METRICS = ("character", "token", "word", "sentence", "punctuation", "shape")
_LINGUISTIC_METRICS = ("passive", "syllable", "long_word", "complex_word")
_POS_ORDER = (
    PosTag.NOUN, PosTag.VERB, PosTag.AUX, PosTag.ADJ, PosTag.ADV, PosTag.PRON,
    PosTag.DET, PosTag.ADP, PosTag.NUM, PosTag.CONJ, PosTag.PUNCT, PosTag.OTHER,
)


def _zero_twitter_block(manifest: FeatureManifest) -> dict:
    return {
        name: 0.0
        for name, category in zip(manifest.names, manifest.categories)
        if category == "twitter"
    }


def twitter_features(tweets, company: CompanyRecord, scorer: TextScorer,
                     topics: list[str], manifest: FeatureManifest) -> dict:
    if not tweets:
        return _zero_twitter_block(manifest)

    n = len(tweets)
    website_host = registrable_domain(company.website_url) if company.website_url else None
    handle = (company.twitter_handle or "").lower()

    per_tweet: dict[str, list[float]] = {
        key: [] for key in (
            *_COUNT_METRICS_4AGG, *_SURFACE_METRICS, *_STRUCTURE_METRICS,
            *_LINGUISTIC_METRICS, "sentiment", "flesch", "syllables_per_word",
            "long_word_fraction", "complex_word_fraction",
        )
    }
    flags = {"contains_website": 0, "mentions_account": 0, "reply_to_company": 0}
    pos_sums = {tag: 0.0 for tag in _POS_ORDER}
    users = set()
    unknown_user = False
    months_active = set()

    for t in tweets:
        text = t.text or ""
        lowered = text.lower()
        tt = tokenize(text)
        stats = readability_stats(tt)
        sc = surface_counts(text)

        per_tweet["like"].append(float(t.like_count))
        per_tweet["retweet"].append(float(t.retweet_count))
        per_tweet["reply"].append(float(t.reply_count))
        per_tweet["quote"].append(float(t.quote_count))
        per_tweet["hashtag"].append(float(sc.hashtags))
        per_tweet["mention"].append(float(sc.mentions))
        per_tweet["link"].append(float(sc.links))
        per_tweet["emoji"].append(float(sc.emojis))
        per_tweet["character"].append(float(len(text)))
        per_tweet["token"].append(float(len(tt.tokens)))
        per_tweet["word"].append(float(stats.word_count))
        per_tweet["sentence"].append(float(stats.sentence_count))
        per_tweet["punctuation"].append(
            float(sum(1 for tok in tt.tokens if tok.tag is PosTag.PUNCT))
        )
        per_tweet["shape"].append(float(shape_signature_count(tt)))
        per_tweet["passive"].append(float(passive_voice_count(tt)))
        per_tweet["syllable"].append(float(stats.syllable_count))
        per_tweet["long_word"].append(float(stats.long_word_count))
        per_tweet["complex_word"].append(float(stats.complex_word_count))
        per_tweet["sentiment"].append(sentiment_compound(text))
        per_tweet["flesch"].append(stats.flesch_score)
        words = stats.word_count
        per_tweet["syllables_per_word"].append(stats.syllable_count / words if words else 0.0)
        per_tweet["long_word_fraction"].append(stats.long_word_count / words if words else 0.0)
        per_tweet["complex_word_fraction"].append(
            stats.complex_word_count / words if words else 0.0
        )

        if website_host and website_host in lowered:
            flags["contains_website"] += 1
        if handle and f"@{handle}" in lowered:
            flags["mentions_account"] += 1
        if handle and lowered.lstrip().startswith(f"@{handle}"):
            flags["reply_to_company"] += 1

        if tt.tokens:
            for tag, fraction in pos_distribution(tt).items():
                pos_sums[tag] += fraction
        if t.author_handle:
            users.add(t.author_handle.lower())
        elif t.author_is_company and handle:
            users.add(handle)
        else:
            unknown_user = True
        months_active.add((t.created_at.year, t.created_at.month))

    row: dict = {}
    company_count = sum(1 for t in tweets if t.author_is_company)
    row["twitter_tweet_count"] = float(n)
    row["twitter_company_tweet_count"] = float(company_count)
    row["twitter_company_tweet_fraction"] = company_count / n
    row["twitter_unique_user_count"] = float(len(users) + (1 if unknown_user else 0))
    row["twitter_distinct_language_count"] = float(distinct_language_count(tweets))

    recent = sorted(tweets, key=lambda t: (t.created_at, t.tweet_id))[-RECENT_SCORED_TWEETS:]
    row["twitter_recent_scored_sentiment_mean"] = float(
        np.mean([scorer.score(t.text or "") for t in recent])
    )

    row.update(_topic_block("twitter", topics))

    for metric in _COUNT_METRICS_4AGG:
        values = np.asarray(per_tweet[metric])
        row[f"twitter_{metric}_mean"] = float(values.mean())
        row[f"twitter_{metric}_total"] = float(values.sum())
        row[f"twitter_{metric}_max"] = float(values.max())
        row[f"twitter_{metric}_std"] = float(values.std())
    for flag, count in flags.items():
        row[f"twitter_{flag}_fraction"] = count / n
        row[f"twitter_{flag}_count"] = float(count)
    for metric in _SURFACE_METRICS + _STRUCTURE_METRICS:
        values = np.asarray(per_tweet[metric])
        row[f"twitter_{metric}_mean"] = float(values.mean())
        row[f"twitter_{metric}_total"] = float(values.sum())
        row[f"twitter_{metric}_max"] = float(values.max())
    sentiments = np.asarray(per_tweet["sentiment"])
    row["twitter_sentiment_mean"] = float(sentiments.mean())
    row["twitter_sentiment_std"] = float(sentiments.std())
    row["twitter_sentiment_min"] = float(sentiments.min())
    row["twitter_sentiment_max"] = float(sentiments.max())
    for metric in _LINGUISTIC_METRICS:
        values = np.asarray(per_tweet[metric])
        row[f"twitter_{metric}_mean"] = float(values.mean())
        row[f"twitter_{metric}_total"] = float(values.sum())
    for tag in _POS_ORDER:
        row[f"twitter_pos_{tag.value.lower()}_mean"] = pos_sums[tag] / n
    row["twitter_flesch_mean"] = float(np.mean(per_tweet["flesch"]))
    row["twitter_flesch_min"] = float(np.min(per_tweet["flesch"]))
    row["twitter_syllables_per_word_mean"] = float(np.mean(per_tweet["syllables_per_word"]))
    row["twitter_long_word_fraction_mean"] = float(np.mean(per_tweet["long_word_fraction"]))
    row["twitter_complex_word_fraction_mean"] = float(np.mean(per_tweet["complex_word_fraction"]))

    engagement_total = sum(row[f"twitter_{m}_total"] for m in _COUNT_METRICS_4AGG)
    row["twitter_engagement_total"] = engagement_total
    row["twitter_engagement_per_tweet_mean"] = engagement_total / n
    row["twitter_tweets_per_month"] = n / float(TWEET_WINDOW_MONTHS)
    row["twitter_active_month_count"] = float(len(months_active))
    return row


# ---------------------------------------------------------------- assembly

def _dominant_topic(*label_lists: list[str]) -> str:
    counts = {label: 0 for label in TOPIC_LABELS}
    total = 0
    for labels in label_lists:
        for label in labels:
            counts[label] += 1
            total += 1
    if total == 0:
        return "none"
    return max(TOPIC_LABELS, key=lambda label: counts[label])  # ties -> first in enum order


def extract_row(view: WindowedView, ranks: PublisherRank, site_ranks: SiteRank,
                manifest: FeatureManifest, models: FeatureModels,
                topic_cache: dict[str, str] | None = None) -> FeatureVector:
    def label_texts(texts: list[str]) -> list[str]:
        if models.topic_labels is None:
            return []
        if topic_cache is not None:
            missing = [t for t in texts if t not in topic_cache]
            if missing:
                for text, label in zip(missing, models.topic_labels(missing)):
                    topic_cache[text] = label
            return [topic_cache[t] for t in texts]
        return models.topic_labels(texts)

    press_topics = label_texts([p.title for p in view.press])
    search_topics = label_texts(
        [item.title for item in view.search.items] if view.search else []
    )
    tweet_topics = label_texts([t.text for t in view.tweets])

    row: dict = {}
    row.update(general_features(view.company, view.observation))
    row.update(funding_features(view.rounds, view.observation, view.company))
    row.update(news_features(view.press, ranks, press_topics))
    row.update(google_features(view.search, view.company, ranks, site_ranks, search_topics))
    row.update(twitter_features(view.tweets, view.company, models.scorer, tweet_topics, manifest))
    row["general_dominant_topic"] = _dominant_topic(press_topics, search_topics, tweet_topics)

    values = tuple(row[name] for name in manifest.names)
    mask = []
    for name, category in zip(manifest.names, manifest.categories):
        if category == "google" and view.search is None:
            mask.append(True)
        elif category == "twitter" and not view.tweets:
            mask.append(True)
        elif name in ("funding_last_amount_usd", "funding_months_since_last_round",
                      "funding_last_stage") and not view.rounds:
            mask.append(True)
        else:
            mask.append(False)
    return FeatureVector(
        company_id=view.company.company_id,
        prediction_date=view.observation.prediction_date,
        values=values,
        mask=tuple(mask),
    )


def assemble_feature_matrix(corpus: Corpus, observations, ranks: PublisherRank,
                            site_ranks: SiteRank, manifest: FeatureManifest,
                            models: FeatureModels | None = None) -> FeatureMatrix:
    """One FeatureVector per observation point, in the given order."""
    models = models or FeatureModels()
    topic_cache: dict[str, str] = {}
    rows = []
    for obs in observations:
        view = apply_time_window(corpus, obs)
        try:
            rows.append(extract_row(view, ranks, site_ranks, manifest, models, topic_cache))
        except Exception as exc:
            exc.args = (f"{exc} [company={obs.company_id} date={obs.prediction_date}]",)
            raise
    return FeatureMatrix(manifest=manifest, rows=tuple(rows))
