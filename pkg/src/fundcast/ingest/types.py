"""Domain records for the five source tables plus windowed views.

All records are frozen dataclasses with tuple-valued collections, so a
loaded corpus is immutable and safely shareable across threads.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field

COMPANY_STATUSES = ("active", "closed", "acquired", "ipo")
ROUND_STAGES = ("angel", "seed", "series_a", "series_b", "series_c_plus", "other")

PRESS_CAP = 2000   # most recent press references kept per company
TWEET_CAP = 5000   # most recent tweets kept per company


@dataclass(frozen=True)
class CompanyRecord:
    company_id: str
    name: str
    description: str
    founded_on: dt.date
    founder_count: int
    industries: tuple[str, ...]
    website_url: str | None
    twitter_handle: str | None
    facebook_handle: str | None
    linkedin_handle: str | None
    country: str
    state: str
    hq_hub_ca: bool
    hq_hub_ny: bool
    hq_hub_tx: bool
    hq_hub_other: bool
    status: str


@dataclass(frozen=True)
class FundingRound:
    company_id: str
    announced_on: dt.date
    amount_usd: float | None
    stage: str
    investor_ids: tuple[str, ...]


@dataclass(frozen=True)
class PressReference:
    company_id: str
    title: str
    publisher: str
    published_on: dt.date


@dataclass(frozen=True)
class SearchItem:
    link: str
    title: str
    snippet: str


@dataclass(frozen=True)
class SearchResponse:
    company_id: str
    query_date: dt.date
    total_results: int
    items: tuple[SearchItem, ...]


@dataclass(frozen=True)
class TweetRecord:
    tweet_id: str
    company_id: str
    author_is_company: bool
    created_at: dt.datetime
    text: str
    like_count: int
    retweet_count: int
    reply_count: int
    quote_count: int
    language_hint: str | None
    author_handle: str | None = None  # optional; enables unique-user counting


@dataclass(frozen=True)
class ObservationPoint:
    company_id: str
    prediction_date: dt.date


@dataclass(frozen=True)
class Corpus:
    """All five tables keyed by company_id; per-company tuples are sorted
    chronologically and capped on load."""

    companies: dict[str, CompanyRecord]
    rounds: dict[str, tuple[FundingRound, ...]] = field(default_factory=dict)
    press: dict[str, tuple[PressReference, ...]] = field(default_factory=dict)
    search: dict[str, tuple[SearchResponse, ...]] = field(default_factory=dict)
    tweets: dict[str, tuple[TweetRecord, ...]] = field(default_factory=dict)

    def company_ids(self) -> list[str]:
        return sorted(self.companies)


@dataclass(frozen=True)
class WindowedView:
    """Everything visible for one observation point, with all records dated
    at or after the prediction date removed."""

    company: CompanyRecord
    observation: ObservationPoint
    rounds: tuple[FundingRound, ...]
    press: tuple[PressReference, ...]
    tweets: tuple[TweetRecord, ...]
    search: SearchResponse | None


@dataclass(frozen=True)
class GenConfig:
    """Synthetic corpus shape: size, class balance, and planted-signal level."""

    companies: int = 200
    positive_rate: float = 0.3
    signal: float = 1.0
    observation_year: int = 2021
    horizon_years: int = 1
