"""Shared fixtures: a trained topic model and small synthetic corpora."""

import datetime as dt

import pytest

from fundcast import topics
from fundcast.featurize import FeatureModels
from fundcast.ingest import (
    CompanyRecord,
    Corpus,
    FundingRound,
    GenConfig,
    PressReference,
    TweetRecord,
    build_observations,
    build_synthetic_corpus,
)
from fundcast.ingest.synthetic import observation_date


@pytest.fixture(scope="session")
def topic_model():
    return topics.train_topic_classifier(topics.synthetic_headlines(70, seed=3))


@pytest.fixture(scope="session")
def feature_models(topic_model):
    return FeatureModels(topic_labels=topic_model.classify_many)


@pytest.fixture(scope="session")
def small_corpus():
    config = GenConfig(companies=120, positive_rate=0.3, signal=1.0)
    corpus = build_synthetic_corpus(config, seed=7)
    observations = build_observations(corpus, [observation_date(config)])
    return corpus, observations


def make_company(company_id="c1", **overrides) -> CompanyRecord:
    base = dict(
        company_id=company_id,
        name="Acme",
        description="we build tools for teams",
        founded_on=dt.date(2018, 3, 15),
        founder_count=2,
        industries=("software",),
        website_url="acme.com",
        twitter_handle="acme",
        facebook_handle=None,
        linkedin_handle="acme",
        country="US",
        state="CA",
        hq_hub_ca=True,
        hq_hub_ny=False,
        hq_hub_tx=False,
        hq_hub_other=False,
        status="active",
    )
    base.update(overrides)
    return CompanyRecord(**base)


def make_round(company_id="c1", announced="2019-06-01", amount=1_000_000.0,
               stage="seed", investors=("inv1",)) -> FundingRound:
    return FundingRound(
        company_id=company_id,
        announced_on=dt.date.fromisoformat(announced),
        amount_usd=amount,
        stage=stage,
        investor_ids=tuple(investors),
    )


def make_press(company_id="c1", title="Acme raises funding round",
               publisher="TechCrunch", published="2020-05-01") -> PressReference:
    return PressReference(
        company_id=company_id,
        title=title,
        publisher=publisher,
        published_on=dt.date.fromisoformat(published),
    )


def make_tweet(company_id="c1", tweet_id="t1", created="2020-11-01T12:00:00",
               text="great product", likes=2, author_handle="user1",
               is_company=False, hint="en") -> TweetRecord:
    return TweetRecord(
        tweet_id=tweet_id,
        company_id=company_id,
        author_is_company=is_company,
        created_at=dt.datetime.fromisoformat(created),
        text=text,
        like_count=likes,
        retweet_count=1,
        reply_count=0,
        quote_count=0,
        language_hint=hint,
        author_handle=author_handle,
    )


def tiny_corpus(company=None, rounds=(), press=(), tweets=(), search=()) -> Corpus:
    company = company or make_company()
    return Corpus(
        companies={company.company_id: company},
        rounds={company.company_id: tuple(rounds)},
        press={company.company_id: tuple(press)},
        search={company.company_id: tuple(search)},
        tweets={company.company_id: tuple(tweets)},
    )
