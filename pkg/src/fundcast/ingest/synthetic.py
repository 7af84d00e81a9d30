"""Deterministic synthetic fixture generator with a planted class signal.

Positive-class companies (those that raise a round inside the horizon
after the observation date) receive systematically stronger signals:
more founders, growth-flavored descriptions, more press with funding
headlines, larger search footprints, and richer, happier tweet activity.
At signal strength 0 the class distributions coincide, so a model trained
on such a corpus should score at chance.

Everything is driven by one seeded RNG; the same seed yields byte-identical
fixture files.
"""

from __future__ import annotations

import datetime as dt
import math
import random
from pathlib import Path

from ..dates import add_months
from ..errors import ConfigError
from ..topics import MARKER_TERMS, compose_headline
from .corpus import write_corpus
from .types import (
    CompanyRecord,
    Corpus,
    FundingRound,
    GenConfig,
    PressReference,
    SearchItem,
    SearchResponse,
    TweetRecord,
)

# Manifest features the generator deliberately shifts between classes; the
# ablation experiment uses len() of this as its k.
PLANTED_FEATURES = (
    "general_founder_count",
    "general_description",
    "funding_round_count",
    "news_article_count",
    "news_topic_count_funding_event",
    "google_total_results",
    "twitter_tweet_count",
    "twitter_like_mean",
    "twitter_sentiment_mean",
    "twitter_unique_user_count",
)

_STAGE_LADDER = ("angel", "seed", "series_a", "series_b", "series_c_plus")
_STAGE_AMOUNTS = {
    "angel": (100_000, 500_000),
    "seed": (500_000, 2_000_000),
    "series_a": (2_000_000, 10_000_000),
    "series_b": (10_000_000, 40_000_000),
    "series_c_plus": (40_000_000, 150_000_000),
}

_NAME_STEMS = (
    "Acme", "Nimbus", "Quanta", "Vertex", "Lumen", "Orbital", "Zephyr",
    "Crestline", "Atlas", "Northbeam", "Bluefin", "Helix", "Pioneer", "Vista",
)
_NAME_SUFFIXES = ("Labs", "Systems", "Works", "Analytics", "Robotics", "Health", "AI")

_INDUSTRIES = (
    "software", "health_care", "financial_services", "robotics", "energy",
    "logistics", "education", "security", "biotech", "media", "retail", "gaming",
)

_STATES = ("CA", "NY", "TX", "WA", "MA", "CO", "IL", "GA", "none")
_COUNTRIES = ("US", "US", "US", "US", "GB", "DE", "CA")

_PUBLISHERS_WEIGHTED = (
    ("TechCrunch", 30), ("PR Newswire", 15), ("Business Wire", 12), ("PRWeb", 8),
    ("VentureBeat", 8), ("Forbes", 6), ("Wired", 4), ("Axios", 4),
    ("Reuters", 4), ("Bloomberg", 3), ("The Verge", 2), ("Sifted", 2),
    ("Crunchbase News", 2),
)

_NEWS_SITES = (
    "techcrunch.com", "prnewswire.com", "businesswire.com", "prweb.com",
    "venturebeat.com", "forbes.com", "wired.com", "axios.com", "reuters.com",
)
_RANDOM_SITES = (
    "medium.com", "github.com", "producthunt.com", "angel.co", "ycombinator.com",
    "glassdoor.com", "indeed.com", "wikipedia.org", "youtube.com", "substack.com",
)

_POSITIVE_WORDS = (
    "great", "awesome", "amazing", "love", "excited", "fantastic",
    "impressive", "winning", "thrilled", "brilliant", "congrats",
)
_NEGATIVE_WORDS = (
    "disappointed", "slow", "terrible", "broken", "worried", "failed",
    "frustrating", "buggy",
)
_NEUTRAL_WORDS = (
    "update", "release", "notes", "demo", "roadmap", "meeting", "webinar",
    "hiring", "remote", "office", "customers", "platform", "feature", "data",
)
_GROWTH_WORDS = (
    "scaling", "traction", "momentum", "growth", "expanding", "accelerating",
    "milestone", "revenue",
)
_DESCRIPTION_WORDS = (
    "we", "build", "tools", "for", "modern", "teams", "using", "data",
    "customers", "platform", "workflow", "automation", "simple", "secure",
    "infrastructure", "insights", "developers", "operations",
)

_TOPIC_POOL = (
    "product_launch", "geo_expansion", "award", "management_change", "other",
    "merger_acquisition",
)


def _poisson(rng: random.Random, lam: float) -> int:
    if lam <= 0:
        return 0
    threshold = math.exp(-lam)
    k = 0
    product = rng.random()
    while product > threshold:
        k += 1
        product *= rng.random()
    return k


def _weighted_choice(rng: random.Random, weighted) -> str:
    total = sum(weight for _, weight in weighted)
    roll = rng.random() * total
    for value, weight in weighted:
        roll -= weight
        if roll <= 0:
            return value
    return weighted[-1][0]


def observation_date(config: GenConfig) -> dt.date:
    return dt.date(config.observation_year, 1, 1)


def _company(rng: random.Random, index: int, positive: bool, config: GenConfig) -> CompanyRecord:
    s = config.signal if positive else 0.0
    obs = observation_date(config)
    stem = rng.choice(_NAME_STEMS)
    name = f"{stem} {rng.choice(_NAME_SUFFIXES)}"
    slug = f"{stem.lower()}{index}"
    founded = add_months(obs, -rng.randint(18, 96)) - dt.timedelta(days=rng.randint(0, 27))
    founders = 1 + _poisson(rng, 1.0 + 2.2 * s)
    country = rng.choice(_COUNTRIES)
    state = rng.choice(_STATES) if country == "US" else "none"
    description = rng.sample(_DESCRIPTION_WORDS, k=rng.randint(6, 10))
    if rng.random() < 0.15 + 0.65 * s:
        description.extend(rng.sample(_GROWTH_WORDS, k=rng.randint(2, 4)))
    rng.shuffle(description)
    return CompanyRecord(
        company_id=f"c{index:05d}",
        name=name,
        description=" ".join(description),
        founded_on=founded,
        founder_count=founders,
        industries=tuple(sorted(rng.sample(_INDUSTRIES, k=rng.randint(1, 3)))),
        website_url=f"{slug}.com",
        twitter_handle=slug if rng.random() < 0.8 else None,
        facebook_handle=slug if rng.random() < 0.5 else None,
        linkedin_handle=slug if rng.random() < 0.6 else None,
        country=country,
        state=state,
        hq_hub_ca=state == "CA",
        hq_hub_ny=state == "NY",
        hq_hub_tx=state == "TX",
        hq_hub_other=state in ("WA", "MA", "CO"),
        status=_weighted_choice(
            rng, (("active", 85), ("acquired", 6), ("closed", 7), ("ipo", 2))
        ),
    )


def _rounds(rng: random.Random, company: CompanyRecord, positive: bool,
            config: GenConfig) -> list[FundingRound]:
    s = config.signal if positive else 0.0
    obs = observation_date(config)
    investors_pool = [f"inv{i:03d}" for i in range(150)]
    rounds: list[FundingRound] = []
    past_investors: list[str] = []

    def make_round(announced: dt.date, stage_index: int) -> FundingRound:
        stage = _STAGE_LADDER[min(stage_index, len(_STAGE_LADDER) - 1)]
        low, high = _STAGE_AMOUNTS[stage]
        amount = None if rng.random() < 0.1 else float(rng.randint(low, high))
        count = rng.randint(1, 4)
        chosen: list[str] = []
        for _ in range(count):
            if past_investors and rng.random() < 0.4:
                chosen.append(rng.choice(past_investors))
            else:
                chosen.append(rng.choice(investors_pool))
        past_investors.extend(chosen)
        return FundingRound(
            company_id=company.company_id,
            announced_on=announced,
            amount_usd=amount,
            stage=stage,
            investor_ids=tuple(dict.fromkeys(chosen)),
        )

    # history before the observation date
    pre_count = _poisson(rng, 0.8 + 1.2 * s)
    available_days = (obs - company.founded_on).days - 200
    if available_days > 30:
        offsets = sorted(rng.sample(range(180, max(available_days, 181)), k=min(pre_count, 5)))
        for stage_index, offset in enumerate(offsets):
            rounds.append(make_round(company.founded_on + dt.timedelta(days=offset), stage_index))

    stage_cursor = len(rounds)
    horizon_days = 365 * config.horizon_years
    if positive:
        offset = rng.randint(0, horizon_days - 1)
        rounds.append(make_round(obs + dt.timedelta(days=offset), stage_cursor))
        stage_cursor += 1
        if rng.random() < 0.15:
            rounds.append(
                make_round(obs + dt.timedelta(days=horizon_days + rng.randint(0, 720)), stage_cursor)
            )
    else:
        # ongoing funding process beyond the horizon: longer horizons see
        # more positives when relabeled
        for extra_year in range(config.horizon_years, config.horizon_years + 5):
            if rng.random() < 0.10:
                offset = 365 * extra_year + rng.randint(0, 364)
                rounds.append(make_round(obs + dt.timedelta(days=offset), stage_cursor))
                stage_cursor += 1
                break
    return rounds


def _press(rng: random.Random, company: CompanyRecord, positive: bool,
           config: GenConfig) -> list[PressReference]:
    s = config.signal if positive else 0.0
    obs = observation_date(config)
    count = min(_poisson(rng, 1.2 + 2.0 * s), 12)
    span = max((obs - company.founded_on).days - 1, 1)
    articles = []
    for _ in range(count):
        label = (
            "funding_event"
            if rng.random() < 0.30 + 0.35 * s
            else rng.choice(_TOPIC_POOL)
        )
        articles.append(
            PressReference(
                company_id=company.company_id,
                title=compose_headline(rng, label, company.name.split()[0]),
                publisher=_weighted_choice(rng, _PUBLISHERS_WEIGHTED),
                published_on=company.founded_on + dt.timedelta(days=rng.randint(0, span)),
            )
        )
    if rng.random() < 0.2:  # future article, must be excluded by windowing
        articles.append(
            PressReference(
                company_id=company.company_id,
                title=compose_headline(rng, "other", company.name.split()[0]),
                publisher=_weighted_choice(rng, _PUBLISHERS_WEIGHTED),
                published_on=obs + dt.timedelta(days=rng.randint(0, 180)),
            )
        )
    return articles


def _search(rng: random.Random, company: CompanyRecord, positive: bool,
            config: GenConfig) -> SearchResponse:
    s = config.signal if positive else 0.0
    obs = observation_date(config)
    total = int(math.exp(rng.gauss(5.5 + 1.2 * s, 0.5)))
    item_count = rng.randint(3, 10)
    items = []
    for _ in range(item_count):
        roll = rng.random()
        if roll < 0.35:
            choice = rng.random()
            if choice < 0.5 or not company.twitter_handle:
                link = f"https://{company.website_url}/about"
            elif choice < 0.8:
                link = f"https://twitter.com/{company.twitter_handle}"
            else:
                link = f"https://www.linkedin.com/company/{company.linkedin_handle or company.twitter_handle}"
        elif roll < 0.65:
            link = f"https://{rng.choice(_NEWS_SITES)}/{company.company_id}"
        else:
            link = f"https://{rng.choice(_RANDOM_SITES)}/{rng.randint(100, 999)}"
        label = "funding_event" if rng.random() < 0.2 + 0.2 * s else rng.choice(_TOPIC_POOL)
        items.append(
            SearchItem(
                link=link,
                title=compose_headline(rng, label, company.name.split()[0]),
                snippet=" ".join(rng.sample(_NEUTRAL_WORDS, k=5)),
            )
        )
    return SearchResponse(
        company_id=company.company_id,
        query_date=obs - dt.timedelta(days=1),
        total_results=total,
        items=tuple(items),
    )


def _tweet_text(rng: random.Random, company: CompanyRecord, tone: str, s: float) -> str:
    words: list[str] = []
    if rng.random() < 0.25:
        words.append(f"@{company.twitter_handle or 'startuplife'}")
    if tone == "positive":
        words.extend(rng.sample(_POSITIVE_WORDS, k=rng.randint(1, 3)))
    elif tone == "negative":
        words.extend(rng.sample(_NEGATIVE_WORDS, k=rng.randint(1, 2)))
    words.extend(rng.sample(_NEUTRAL_WORDS, k=rng.randint(3, 7)))
    if rng.random() < 0.2 + 0.3 * s:
        words.extend(rng.sample(MARKER_TERMS["funding_event"], k=2))
    if rng.random() < 0.2:
        words.append(f"https://{company.website_url}")
    if rng.random() < 0.4:
        words.append(f"#{rng.choice(('startup', 'tech', 'ai', 'founders'))}")
    if rng.random() < 0.25:
        words.append(rng.choice(("\U0001F680", "\U0001F389", "\U0001F4C8")))
    rng.shuffle(words)
    text = " ".join(words)
    if rng.random() < 0.3:
        text += "!"
    return text


def _tweets(rng: random.Random, company: CompanyRecord, positive: bool,
            config: GenConfig, tweet_serial: list[int]) -> list[TweetRecord]:
    s = config.signal if positive else 0.0
    obs = observation_date(config)
    if rng.random() < 0.12:
        return []
    count = min(_poisson(rng, 3.5 + 9.0 * s), 40)
    records = []

    def make_tweet(day_offset_back: int) -> TweetRecord:
        tweet_serial[0] += 1
        created = dt.datetime.combine(
            obs - dt.timedelta(days=day_offset_back),
            dt.time(rng.randint(0, 23), rng.randint(0, 59), rng.randint(0, 59)),
        )
        tone_roll = rng.random()
        if tone_roll < 0.35 + 0.45 * s:
            tone = "positive"
        elif tone_roll < 0.60 + 0.45 * s - 0.15 * s:
            tone = "negative"
        else:
            tone = "neutral"
        is_company = rng.random() < 0.3 and company.twitter_handle is not None
        handle = company.twitter_handle if is_company else f"user{rng.randint(0, 499)}"
        return TweetRecord(
            tweet_id=f"t{tweet_serial[0]:07d}",
            company_id=company.company_id,
            author_is_company=is_company,
            created_at=created,
            text=_tweet_text(rng, company, tone, s),
            like_count=_poisson(rng, 1.5 + 6.0 * s),
            retweet_count=_poisson(rng, 0.8 + 3.0 * s),
            reply_count=_poisson(rng, 0.5 + 2.0 * s),
            quote_count=_poisson(rng, 0.3 + 1.0 * s),
            language_hint=_weighted_choice(
                rng, (("en", 80), ("", 15), ("fr", 3), ("es", 2))
            ) or None,
            author_handle=handle,
        )

    for _ in range(count):
        records.append(make_tweet(rng.randint(1, 269)))
    if rng.random() < 0.3:  # stale tweets outside the nine-month window
        for _ in range(rng.randint(1, 3)):
            records.append(make_tweet(rng.randint(280, 400)))
    if rng.random() < 0.2:  # future tweets; windowing must drop them
        for _ in range(rng.randint(1, 2)):
            records.append(make_tweet(-rng.randint(0, 90)))
    return records


def build_synthetic_corpus(config: GenConfig, seed: int) -> Corpus:
    """In-memory corpus; generate_synthetic_corpus writes it to disk."""
    if not 0.0 <= config.positive_rate <= 1.0:
        raise ConfigError("positive_rate must be within [0, 1]")
    if config.companies < 1:
        raise ConfigError("companies must be >= 1")
    if not 0.0 <= config.signal <= 1.0:
        raise ConfigError("signal must be within [0, 1]")
    rng = random.Random(seed)
    positive_count = round(config.companies * config.positive_rate)
    positives = set(rng.sample(range(config.companies), positive_count))

    companies: dict[str, CompanyRecord] = {}
    rounds: dict[str, tuple] = {}
    press: dict[str, tuple] = {}
    search: dict[str, tuple] = {}
    tweets: dict[str, tuple] = {}
    tweet_serial = [0]
    for index in range(config.companies):
        positive = index in positives
        company = _company(rng, index, positive, config)
        companies[company.company_id] = company
        rounds[company.company_id] = tuple(
            sorted(_rounds(rng, company, positive, config), key=lambda r: r.announced_on)
        )
        press[company.company_id] = tuple(
            sorted(_press(rng, company, positive, config), key=lambda p: p.published_on)
        )
        search[company.company_id] = (_search(rng, company, positive, config),)
        tweets[company.company_id] = tuple(
            sorted(
                _tweets(rng, company, positive, config, tweet_serial),
                key=lambda t: t.created_at,
            )
        )
    return Corpus(companies=companies, rounds=rounds, press=press, search=search, tweets=tweets)


def generate_synthetic_corpus(config: GenConfig, seed: int, out_dir: str | Path) -> Path:
    """Write fixture files for a synthetic corpus; byte-identical per seed."""
    corpus = build_synthetic_corpus(config, seed)
    out = Path(out_dir)
    write_corpus(corpus, out)
    return out
