"""Corpus ingestion: fixture parsing, query building, windowing, synthesis."""

from .corpus import (
    CorpusSource,
    FixtureCorpusSource,
    live_credentials,
    load_corpus,
    write_corpus,
)
from .query import RETWEET_EXCLUSION, build_tweet_query
from .synthetic import (
    PLANTED_FEATURES,
    build_synthetic_corpus,
    generate_synthetic_corpus,
    observation_date,
)
from .types import (
    COMPANY_STATUSES,
    PRESS_CAP,
    ROUND_STAGES,
    TWEET_CAP,
    CompanyRecord,
    Corpus,
    FundingRound,
    GenConfig,
    ObservationPoint,
    PressReference,
    SearchItem,
    SearchResponse,
    TweetRecord,
    WindowedView,
)
from .windows import (
    SEARCH_LOOKBACK_YEARS,
    TWEET_WINDOW_MONTHS,
    apply_time_window,
    build_observations,
)

__all__ = [
    "COMPANY_STATUSES",
    "CompanyRecord",
    "Corpus",
    "CorpusSource",
    "FixtureCorpusSource",
    "FundingRound",
    "GenConfig",
    "ObservationPoint",
    "PLANTED_FEATURES",
    "PRESS_CAP",
    "PressReference",
    "RETWEET_EXCLUSION",
    "ROUND_STAGES",
    "SEARCH_LOOKBACK_YEARS",
    "SearchItem",
    "SearchResponse",
    "TWEET_CAP",
    "TWEET_WINDOW_MONTHS",
    "TweetRecord",
    "WindowedView",
    "apply_time_window",
    "build_observations",
    "build_synthetic_corpus",
    "build_tweet_query",
    "generate_synthetic_corpus",
    "live_credentials",
    "load_corpus",
    "observation_date",
    "write_corpus",
]
