"""Temporal windowing: nothing dated at or after the prediction date survives.

Windows, with the lower bound inclusive and the prediction date exclusive:

* tweets: [prediction_date - 9 months, prediction_date)
* search: [founded_on - 1 year, prediction_date), most recent response kept
* press and funding rounds: (-infinity, prediction_date)
"""

from __future__ import annotations

import datetime as dt

from ..dates import add_months, add_years
from ..errors import UnknownCompanyError
from .types import TWEET_CAP, Corpus, ObservationPoint, WindowedView

TWEET_WINDOW_MONTHS = 9
SEARCH_LOOKBACK_YEARS = 1


def apply_time_window(corpus: Corpus, obs: ObservationPoint) -> WindowedView:
    company = corpus.companies.get(obs.company_id)
    if company is None:
        raise UnknownCompanyError(f"unknown company_id {obs.company_id!r}")
    cutoff = obs.prediction_date

    rounds = tuple(
        r for r in corpus.rounds.get(obs.company_id, ()) if r.announced_on < cutoff
    )
    press = tuple(
        p for p in corpus.press.get(obs.company_id, ()) if p.published_on < cutoff
    )

    tweet_start = add_months(cutoff, -TWEET_WINDOW_MONTHS)
    tweets = tuple(
        t for t in corpus.tweets.get(obs.company_id, ())
        if tweet_start <= t.created_at.date() < cutoff
    )[-TWEET_CAP:]

    search_start = add_years(company.founded_on, -SEARCH_LOOKBACK_YEARS)
    in_window = [
        s for s in corpus.search.get(obs.company_id, ())
        if search_start <= s.query_date < cutoff
    ]
    search = max(in_window, key=lambda s: s.query_date) if in_window else None

    return WindowedView(
        company=company,
        observation=obs,
        rounds=rounds,
        press=press,
        tweets=tweets,
        search=search,
    )


def build_observations(corpus: Corpus, prediction_dates: list[dt.date]) -> list[ObservationPoint]:
    """One observation per (company, date) pair with the date on or after
    the company's founding, ordered by date then company id."""
    observations = []
    for prediction_date in sorted(prediction_dates):
        for company_id in corpus.company_ids():
            if corpus.companies[company_id].founded_on <= prediction_date:
                observations.append(
                    ObservationPoint(company_id=company_id, prediction_date=prediction_date)
                )
    return observations
