"""Fixture-directory reader/writer for the five source tables.

Directory layout::

    companies.csv
    funding_rounds.csv
    press_references.csv
    search/<company_id>_<YYYY-MM-DD>.json
    tweets/<company_id>.jsonl

CSV files are UTF-8 with a header row; dates are ISO-8601. The three CSV
tables are mandatory; the search/ and tweets/ trees may be absent. Press
and tweet histories are capped to the most recent records on load.
"""

from __future__ import annotations

import abc
import csv
import json
import os
from pathlib import Path

from ..dates import parse_date, parse_datetime
from ..errors import CorpusParseError, MissingTableError, UnknownCompanyError
from .types import (
    COMPANY_STATUSES,
    PRESS_CAP,
    ROUND_STAGES,
    TWEET_CAP,
    CompanyRecord,
    Corpus,
    FundingRound,
    PressReference,
    SearchItem,
    SearchResponse,
    TweetRecord,
)

COMPANY_FIELDS = [
    "company_id", "name", "description", "founded_on", "founder_count",
    "industries", "website_url", "twitter_handle", "facebook_handle",
    "linkedin_handle", "country", "state", "hq_hub_ca", "hq_hub_ny",
    "hq_hub_tx", "hq_hub_other", "status",
]
ROUND_FIELDS = ["company_id", "announced_on", "amount_usd", "stage", "investor_ids"]
PRESS_FIELDS = ["company_id", "title", "publisher", "published_on"]

ENV_TWITTER_TOKEN = "TWITTER_BEARER_TOKEN"
ENV_SEARCH_KEY = "SEARCH_API_KEY"
ENV_CRUNCHBASE_KEY = "CB_API_KEY"


class CorpusSource(abc.ABC):
    """A provider of complete corpora.

    The fixture reader below is the only mandatory implementation; live
    API clients (Crunchbase, web search, Twitter) plug in behind the same
    interface and must emit the same record types.
    """

    @abc.abstractmethod
    def load(self) -> Corpus: ...


class FixtureCorpusSource(CorpusSource):
    def __init__(self, fixture_dir: str | Path):
        self.fixture_dir = Path(fixture_dir)

    def load(self) -> Corpus:
        return load_corpus(self.fixture_dir)


def live_credentials() -> dict[str, str | None]:
    """Optional API credentials for live-mode clients, from the environment."""
    return {
        "twitter_bearer_token": os.environ.get(ENV_TWITTER_TOKEN),
        "search_api_key": os.environ.get(ENV_SEARCH_KEY),
        "crunchbase_api_key": os.environ.get(ENV_CRUNCHBASE_KEY),
    }


def _parse_bool(raw: str, path: Path, line: int) -> bool:
    if raw == "true":
        return True
    if raw == "false":
        return False
    raise CorpusParseError(f"expected true/false, got {raw!r}", path, line)


def _parse_int(raw: str, path: Path, line: int, minimum: int | None = None) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise CorpusParseError(f"expected integer, got {raw!r}", path, line) from None
    if minimum is not None and value < minimum:
        raise CorpusParseError(f"expected integer >= {minimum}, got {value}", path, line)
    return value


def _parse_iso_date(raw: str, path: Path, line: int):
    try:
        return parse_date(raw)
    except ValueError:
        raise CorpusParseError(f"expected ISO date, got {raw!r}", path, line) from None


def _read_csv(path: Path, fields: list[str]):
    if not path.is_file():
        raise MissingTableError(f"missing fixture table: {path}")
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != fields:
            raise CorpusParseError(
                f"unexpected header {reader.fieldnames!r}", path, 1
            )
        for line, row in enumerate(reader, start=2):
            if None in row or any(v is None for v in row.values()):
                raise CorpusParseError("malformed row", path, line)
            yield line, row


def _split_multi(raw: str) -> tuple[str, ...]:
    return tuple(part for part in raw.split(";") if part)


def _load_companies(path: Path) -> dict[str, CompanyRecord]:
    companies: dict[str, CompanyRecord] = {}
    for line, row in _read_csv(path, COMPANY_FIELDS):
        company_id = row["company_id"]
        if not company_id:
            raise CorpusParseError("empty company_id", path, line)
        if company_id in companies:
            raise CorpusParseError(f"duplicate company_id {company_id!r}", path, line)
        if row["status"] not in COMPANY_STATUSES:
            raise CorpusParseError(f"unknown status {row['status']!r}", path, line)
        companies[company_id] = CompanyRecord(
            company_id=company_id,
            name=row["name"],
            description=row["description"],
            founded_on=_parse_iso_date(row["founded_on"], path, line),
            founder_count=_parse_int(row["founder_count"], path, line, minimum=0),
            industries=_split_multi(row["industries"]),
            website_url=row["website_url"] or None,
            twitter_handle=row["twitter_handle"] or None,
            facebook_handle=row["facebook_handle"] or None,
            linkedin_handle=row["linkedin_handle"] or None,
            country=row["country"],
            state=row["state"],
            hq_hub_ca=_parse_bool(row["hq_hub_ca"], path, line),
            hq_hub_ny=_parse_bool(row["hq_hub_ny"], path, line),
            hq_hub_tx=_parse_bool(row["hq_hub_tx"], path, line),
            hq_hub_other=_parse_bool(row["hq_hub_other"], path, line),
            status=row["status"],
        )
    return companies


def _check_company(company_id: str, companies: dict, path: Path, line=None):
    if company_id not in companies:
        raise UnknownCompanyError(
            f"unknown company_id {company_id!r} referenced in {path}"
            + (f":{line}" if line is not None else "")
        )


def _load_rounds(path: Path, companies: dict) -> dict[str, list[FundingRound]]:
    rounds: dict[str, list[FundingRound]] = {}
    for line, row in _read_csv(path, ROUND_FIELDS):
        _check_company(row["company_id"], companies, path, line)
        if row["stage"] not in ROUND_STAGES:
            raise CorpusParseError(f"unknown stage {row['stage']!r}", path, line)
        amount = None
        if row["amount_usd"]:
            amount = float(row["amount_usd"])
            if amount < 0:
                raise CorpusParseError("negative amount_usd", path, line)
        rounds.setdefault(row["company_id"], []).append(
            FundingRound(
                company_id=row["company_id"],
                announced_on=_parse_iso_date(row["announced_on"], path, line),
                amount_usd=amount,
                stage=row["stage"],
                investor_ids=_split_multi(row["investor_ids"]),
            )
        )
    return rounds


def _load_press(path: Path, companies: dict) -> dict[str, list[PressReference]]:
    press: dict[str, list[PressReference]] = {}
    for line, row in _read_csv(path, PRESS_FIELDS):
        _check_company(row["company_id"], companies, path, line)
        if not row["title"]:
            raise CorpusParseError("empty press title", path, line)
        press.setdefault(row["company_id"], []).append(
            PressReference(
                company_id=row["company_id"],
                title=row["title"],
                publisher=row["publisher"],
                published_on=_parse_iso_date(row["published_on"], path, line),
            )
        )
    return press


def _load_search(search_dir: Path, companies: dict) -> dict[str, list[SearchResponse]]:
    responses: dict[str, list[SearchResponse]] = {}
    if not search_dir.is_dir():
        return responses
    for path in sorted(search_dir.glob("*.json")):
        with open(path, encoding="utf-8") as handle:
            try:
                payload = json.load(handle)
            except json.JSONDecodeError as exc:
                raise CorpusParseError(f"invalid JSON: {exc}", path) from None
        company_id = payload.get("company_id", "")
        _check_company(company_id, companies, path)
        items = payload.get("items", [])
        if len(items) > 10:
            raise CorpusParseError("more than 10 search items", path)
        total = payload.get("total_results", 0)
        if not isinstance(total, int) or total < 0:
            raise CorpusParseError("total_results must be a non-negative integer", path)
        try:
            query_date = parse_date(payload["query_date"])
        except (KeyError, ValueError):
            raise CorpusParseError("missing or invalid query_date", path) from None
        responses.setdefault(company_id, []).append(
            SearchResponse(
                company_id=company_id,
                query_date=query_date,
                total_results=total,
                items=tuple(
                    SearchItem(
                        link=item.get("link", ""),
                        title=item.get("title", ""),
                        snippet=item.get("snippet", ""),
                    )
                    for item in items
                ),
            )
        )
    return responses


def _load_tweets(tweets_dir: Path, companies: dict) -> dict[str, list[TweetRecord]]:
    tweets: dict[str, list[TweetRecord]] = {}
    if not tweets_dir.is_dir():
        return tweets
    for path in sorted(tweets_dir.glob("*.jsonl")):
        with open(path, encoding="utf-8") as handle:
            for line, raw in enumerate(handle, start=1):
                raw = raw.strip()
                if not raw:
                    continue
                try:
                    payload = json.loads(raw)
                except json.JSONDecodeError as exc:
                    raise CorpusParseError(f"invalid JSON: {exc}", path, line) from None
                company_id = payload.get("company_id", "")
                _check_company(company_id, companies, path, line)
                counts = {}
                for key in ("like_count", "retweet_count", "reply_count", "quote_count"):
                    value = payload.get(key, 0)
                    if not isinstance(value, int) or value < 0:
                        raise CorpusParseError(f"{key} must be >= 0", path, line)
                    counts[key] = value
                try:
                    created_at = parse_datetime(payload["created_at"])
                except (KeyError, ValueError):
                    raise CorpusParseError("missing or invalid created_at", path, line) from None
                tweets.setdefault(company_id, []).append(
                    TweetRecord(
                        tweet_id=str(payload.get("tweet_id", "")),
                        company_id=company_id,
                        author_is_company=bool(payload.get("author_is_company", False)),
                        created_at=created_at,
                        text=payload.get("text", ""),
                        language_hint=payload.get("language_hint"),
                        author_handle=payload.get("author_handle"),
                        **counts,
                    )
                )
    return tweets


def load_corpus(fixture_dir: str | Path) -> Corpus:
    """Read, validate, and cross-reference all five tables."""
    root = Path(fixture_dir)
    if not root.is_dir():
        raise MissingTableError(f"fixture directory does not exist: {root}")
    companies = _load_companies(root / "companies.csv")
    rounds = _load_rounds(root / "funding_rounds.csv", companies)
    press = _load_press(root / "press_references.csv", companies)
    search = _load_search(root / "search", companies)
    tweets = _load_tweets(root / "tweets", companies)

    by_company = {
        "rounds": {}, "press": {}, "search": {}, "tweets": {},
    }
    for company_id in companies:
        company_rounds = sorted(rounds.get(company_id, []), key=lambda r: r.announced_on)
        by_company["rounds"][company_id] = tuple(company_rounds)
        company_press = sorted(press.get(company_id, []), key=lambda p: p.published_on)
        by_company["press"][company_id] = tuple(company_press[-PRESS_CAP:])
        by_company["search"][company_id] = tuple(
            sorted(search.get(company_id, []), key=lambda s: s.query_date)
        )
        company_tweets = sorted(tweets.get(company_id, []), key=lambda t: t.created_at)
        by_company["tweets"][company_id] = tuple(company_tweets[-TWEET_CAP:])
    return Corpus(companies=companies, **by_company)


def _csv_bool(value: bool) -> str:
    return "true" if value else "false"


def _join_multi(values, field: str) -> str:
    for value in values:
        if ";" in value:
            raise CorpusParseError(
                f"{field} value {value!r} contains the ';' list separator"
            )
    return ";".join(values)


def write_corpus(corpus: Corpus, out_dir: str | Path) -> None:
    """Write a corpus in the exact fixture formats load_corpus reads."""
    root = Path(out_dir)
    (root / "search").mkdir(parents=True, exist_ok=True)
    (root / "tweets").mkdir(parents=True, exist_ok=True)

    with open(root / "companies.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(COMPANY_FIELDS)
        for company_id in sorted(corpus.companies):
            c = corpus.companies[company_id]
            writer.writerow([
                c.company_id, c.name, c.description, c.founded_on.isoformat(),
                c.founder_count, _join_multi(c.industries, "industries"), c.website_url or "",
                c.twitter_handle or "", c.facebook_handle or "", c.linkedin_handle or "",
                c.country, c.state, _csv_bool(c.hq_hub_ca), _csv_bool(c.hq_hub_ny),
                _csv_bool(c.hq_hub_tx), _csv_bool(c.hq_hub_other), c.status,
            ])

    with open(root / "funding_rounds.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(ROUND_FIELDS)
        for company_id in sorted(corpus.companies):
            for r in corpus.rounds.get(company_id, ()):
                amount = "" if r.amount_usd is None else repr(float(r.amount_usd))
                writer.writerow([
                    r.company_id, r.announced_on.isoformat(), amount, r.stage,
                    _join_multi(r.investor_ids, "investor_ids"),
                ])

    with open(root / "press_references.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(PRESS_FIELDS)
        for company_id in sorted(corpus.companies):
            for p in corpus.press.get(company_id, ()):
                writer.writerow([
                    p.company_id, p.title, p.publisher, p.published_on.isoformat(),
                ])

    for company_id in sorted(corpus.companies):
        for response in corpus.search.get(company_id, ()):
            name = f"{company_id}_{response.query_date.isoformat()}.json"
            payload = {
                "company_id": response.company_id,
                "query_date": response.query_date.isoformat(),
                "total_results": response.total_results,
                "items": [
                    {"link": i.link, "title": i.title, "snippet": i.snippet}
                    for i in response.items
                ],
            }
            with open(root / "search" / name, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, indent=2, sort_keys=True)
                handle.write("\n")

    for company_id in sorted(corpus.companies):
        records = corpus.tweets.get(company_id, ())
        if not records:
            continue
        with open(root / "tweets" / f"{company_id}.jsonl", "w", encoding="utf-8") as handle:
            for t in records:
                payload = {
                    "tweet_id": t.tweet_id,
                    "company_id": t.company_id,
                    "author_is_company": t.author_is_company,
                    "author_handle": t.author_handle,
                    "created_at": t.created_at.isoformat(),
                    "text": t.text,
                    "like_count": t.like_count,
                    "retweet_count": t.retweet_count,
                    "reply_count": t.reply_count,
                    "quote_count": t.quote_count,
                    "language_hint": t.language_hint,
                }
                handle.write(json.dumps(payload, sort_keys=True) + "\n")
