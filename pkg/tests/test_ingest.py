"""Fixture loading, query grammar, windowing, and the synthetic generator."""

import datetime as dt
import hashlib
import random
from pathlib import Path

import pytest

from conftest import make_company, make_press, make_round, make_tweet, tiny_corpus
from fundcast.errors import (
    ConfigError,
    CorpusParseError,
    EmptyQueryError,
    MissingTableError,
    UnknownCompanyError,
)
from fundcast.ingest import (
    Corpus,
    GenConfig,
    ObservationPoint,
    PRESS_CAP,
    apply_time_window,
    build_observations,
    build_synthetic_corpus,
    build_tweet_query,
    generate_synthetic_corpus,
    load_corpus,
    write_corpus,
)
from fundcast.ingest.synthetic import observation_date


def _write_minimal_fixture(root: Path, companies_rows, rounds_rows=(), press_rows=()):
    root.mkdir(parents=True, exist_ok=True)
    header = (
        "company_id,name,description,founded_on,founder_count,industries,"
        "website_url,twitter_handle,facebook_handle,linkedin_handle,country,"
        "state,hq_hub_ca,hq_hub_ny,hq_hub_tx,hq_hub_other,status"
    )
    (root / "companies.csv").write_text(
        "\n".join([header, *companies_rows]) + "\n", encoding="utf-8"
    )
    (root / "funding_rounds.csv").write_text(
        "\n".join(["company_id,announced_on,amount_usd,stage,investor_ids", *rounds_rows]) + "\n",
        encoding="utf-8",
    )
    (root / "press_references.csv").write_text(
        "\n".join(["company_id,title,publisher,published_on", *press_rows]) + "\n",
        encoding="utf-8",
    )


GOOD_COMPANY = (
    "c1,Acme,builds tools,2018-03-15,2,software;biotech,acme.com,acme,,acme,"
    "US,CA,true,false,false,false,active"
)


# ------------------------------------------------------------------ loading

def test_load_one_company_no_rounds(tmp_path):
    _write_minimal_fixture(tmp_path, [GOOD_COMPANY])
    corpus = load_corpus(tmp_path)
    assert len(corpus.companies) == 1
    assert corpus.rounds["c1"] == ()
    assert corpus.companies["c1"].industries == ("software", "biotech")


def test_load_counts_match_fixture(tmp_path):
    companies = [
        GOOD_COMPANY,
        "c2,Beta,desc,2019-01-01,1,media,beta.io,beta,,,US,NY,false,true,false,false,active",
        "c3,Gamma,desc,2020-06-30,3,,gamma.ai,,,,DE,none,false,false,false,false,closed",
    ]
    rounds = [
        "c1,2019-06-01,1000000.0,seed,inv1;inv2",
        "c1,2020-06-01,5000000.0,series_a,inv1",
        "c2,2019-09-01,,angel,inv3",
        "c2,2020-03-01,250000.0,angel,",
        "c3,2020-12-01,750000.0,seed,inv4",
    ]
    press = [
        "c1,Acme raises round,TechCrunch,2020-01-01",
        "c2,Beta launches product,Wired,2020-02-01",
        "c2,Beta expands,Forbes,2020-04-01",
        "c3,Gamma wins award,Axios,2020-07-01",
    ]
    _write_minimal_fixture(tmp_path, companies, rounds, press)
    corpus = load_corpus(tmp_path)
    assert len(corpus.companies) == 3
    assert sum(len(v) for v in corpus.rounds.values()) == 5
    assert sum(len(v) for v in corpus.press.values()) == 4
    assert corpus.rounds["c2"][0].amount_usd is None


def test_negative_founder_count_rejected(tmp_path):
    bad = GOOD_COMPANY.replace(",2,software;biotech", ",-1,software;biotech")
    _write_minimal_fixture(tmp_path, [bad])
    with pytest.raises(CorpusParseError) as excinfo:
        load_corpus(tmp_path)
    assert "companies.csv" in str(excinfo.value)


def test_missing_table(tmp_path):
    _write_minimal_fixture(tmp_path, [GOOD_COMPANY])
    (tmp_path / "funding_rounds.csv").unlink()
    with pytest.raises(MissingTableError):
        load_corpus(tmp_path)


def test_dangling_company_reference(tmp_path):
    _write_minimal_fixture(tmp_path, [GOOD_COMPANY], ["cX,2020-01-01,1.0,seed,"])
    with pytest.raises(UnknownCompanyError):
        load_corpus(tmp_path)


def test_bad_date_carries_file_and_line(tmp_path):
    _write_minimal_fixture(
        tmp_path, [GOOD_COMPANY], ["c1,not-a-date,1.0,seed,inv1"]
    )
    with pytest.raises(CorpusParseError) as excinfo:
        load_corpus(tmp_path)
    assert "funding_rounds.csv:2" in str(excinfo.value)


def test_press_cap_keeps_most_recent(tmp_path):
    press = [
        f"c1,Story number {i},Pub,{dt.date(2010, 1, 1) + dt.timedelta(days=i)}"
        for i in range(PRESS_CAP + 5)
    ]
    _write_minimal_fixture(tmp_path, [GOOD_COMPANY], press_rows=press)
    corpus = load_corpus(tmp_path)
    kept = corpus.press["c1"]
    assert len(kept) == PRESS_CAP
    assert kept[0].title == "Story number 5"  # oldest five dropped


# -------------------------------------------------------------- round trip

def test_write_load_round_trip():
    corpus = build_synthetic_corpus(GenConfig(companies=25), seed=13)
    import tempfile

    with tempfile.TemporaryDirectory() as out:
        write_corpus(corpus, out)
        assert load_corpus(out) == corpus


def test_write_round_trips_awkward_strings(tmp_path):
    company = make_company(
        name='Acme, "The Best"', description="line one\nline two, with ünïcøde"
    )
    corpus = tiny_corpus(
        company,
        press=[make_press(title='Raises, "quoted" round')],
        tweets=[make_tweet(text="tab\there and\nnewline")],
    )
    write_corpus(corpus, tmp_path)
    assert load_corpus(tmp_path) == corpus


def test_write_rejects_list_separator_in_values(tmp_path):
    company = make_company(industries=("soft;ware",))
    with pytest.raises(CorpusParseError):
        write_corpus(tiny_corpus(company), tmp_path)


# ------------------------------------------------------------ query builder

def test_query_with_site_and_handle():
    company = make_company()
    assert build_tweet_query(company) == (
        "acme.com OR from:acme OR url:acme OR @acme -is:retweet"
    )


def test_query_handle_only():
    company = make_company(website_url=None)
    assert build_tweet_query(company) == "from:acme OR url:acme OR @acme -is:retweet"


def test_query_site_only():
    company = make_company(twitter_handle=None)
    assert build_tweet_query(company) == "acme.com -is:retweet"


def test_query_nothing_raises():
    company = make_company(website_url=None, twitter_handle=None)
    with pytest.raises(EmptyQueryError):
        build_tweet_query(company)


def test_query_always_ends_with_retweet_exclusion():
    rng = random.Random(5)
    for _ in range(50):
        company = make_company(
            website_url="site.com" if rng.random() < 0.5 else None,
            twitter_handle="acme" if rng.random() < 0.5 else None,
        )
        if not company.website_url and not company.twitter_handle:
            continue
        query = build_tweet_query(company)
        assert query.endswith("-is:retweet")
        clause_count = len(query[: -len(" -is:retweet")].split(" OR "))
        expected = (1 if company.website_url else 0) + (3 if company.twitter_handle else 0)
        assert clause_count == expected


# --------------------------------------------------------------- windowing

def _obs(date="2021-01-01"):
    return ObservationPoint(company_id="c1", prediction_date=dt.date.fromisoformat(date))


def test_tweet_day_before_included():
    corpus = tiny_corpus(tweets=[make_tweet(created="2020-12-31T23:59:00")])
    view = apply_time_window(corpus, _obs())
    assert len(view.tweets) == 1


def test_tweet_on_prediction_date_excluded():
    corpus = tiny_corpus(tweets=[make_tweet(created="2021-01-01T00:00:00")])
    view = apply_time_window(corpus, _obs())
    assert view.tweets == ()


def test_tweet_ten_months_back_excluded():
    # 2021-01-01 minus 9 months -> 2020-04-01 window start
    corpus = tiny_corpus(tweets=[
        make_tweet(tweet_id="a", created="2020-03-01T10:00:00"),
        make_tweet(tweet_id="b", created="2020-04-01T00:00:00"),
    ])
    view = apply_time_window(corpus, _obs())
    assert [t.tweet_id for t in view.tweets] == ["b"]


def test_press_and_rounds_window():
    corpus = tiny_corpus(
        rounds=[make_round(announced="2020-12-31"), make_round(announced="2021-01-01")],
        press=[make_press(published="2015-01-01"), make_press(published="2021-06-01")],
    )
    view = apply_time_window(corpus, _obs())
    assert len(view.rounds) == 1
    assert len(view.press) == 1
    assert view.press[0].published_on == dt.date(2015, 1, 1)


def test_unknown_company():
    corpus = tiny_corpus()
    with pytest.raises(UnknownCompanyError):
        apply_time_window(corpus, ObservationPoint("ghost", dt.date(2021, 1, 1)))


def test_windowing_excludes_future_records_property():
    rng = random.Random(99)
    corpus = build_synthetic_corpus(GenConfig(companies=40), seed=21)
    cutoff = dt.date(2021, 1, 1)
    for company_id in corpus.company_ids():
        if corpus.companies[company_id].founded_on > cutoff:
            continue
        view = apply_time_window(corpus, ObservationPoint(company_id, cutoff))
        for r in view.rounds:
            assert r.announced_on < cutoff
        for p in view.press:
            assert p.published_on < cutoff
        for t in view.tweets:
            assert t.created_at.date() < cutoff
        if view.search:
            assert view.search.query_date < cutoff
    _ = rng  # reserved for future randomized corpora


def test_build_observations_requires_founded_before():
    company = make_company(founded_on=dt.date(2022, 5, 1))
    corpus = tiny_corpus(company)
    assert build_observations(corpus, [dt.date(2021, 1, 1)]) == []
    assert len(build_observations(corpus, [dt.date(2023, 1, 1)])) == 1


# ---------------------------------------------------------------- generator

def test_generator_exact_positive_count():
    config = GenConfig(companies=100, positive_rate=0.3, horizon_years=1)
    corpus = build_synthetic_corpus(config, seed=7)
    obs_date = observation_date(config)
    end = dt.date(obs_date.year + 1, 1, 1)
    positives = sum(
        1
        for company_id in corpus.company_ids()
        if any(obs_date <= r.announced_on < end for r in corpus.rounds[company_id])
    )
    assert positives == 30


def test_generator_deterministic_files(tmp_path):
    config = GenConfig(companies=30)
    left = tmp_path / "a"
    right = tmp_path / "b"
    generate_synthetic_corpus(config, 7, left)
    generate_synthetic_corpus(config, 7, right)

    def tree_digest(root: Path) -> str:
        digest = hashlib.sha256()
        for path in sorted(root.rglob("*")):
            if path.is_file():
                digest.update(path.relative_to(root).as_posix().encode())
                digest.update(path.read_bytes())
        return digest.hexdigest()

    assert tree_digest(left) == tree_digest(right)


def test_generator_rejects_bad_rate():
    with pytest.raises(ConfigError):
        build_synthetic_corpus(GenConfig(companies=10, positive_rate=1.5), seed=1)


def test_generator_observation_valid_for_all():
    config = GenConfig(companies=50)
    corpus = build_synthetic_corpus(config, seed=3)
    obs_date = observation_date(config)
    for company in corpus.companies.values():
        assert company.founded_on <= obs_date
        assert company.founder_count >= 1
