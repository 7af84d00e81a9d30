"""Tweet search query construction.

The query ORs every available identity filter (website URL, posted-by,
repost-of, and mention clauses derived from the handle) and always appends
the retweet exclusion.
"""

from __future__ import annotations

from ..errors import EmptyQueryError
from .types import CompanyRecord

RETWEET_EXCLUSION = "-is:retweet"


def build_tweet_query(company: CompanyRecord) -> str:
    clauses = []
    if company.website_url:
        clauses.append(company.website_url)
    if company.twitter_handle:
        handle = company.twitter_handle
        clauses.extend([f"from:{handle}", f"url:{handle}", f"@{handle}"])
    if not clauses:
        raise EmptyQueryError(
            f"company {company.company_id!r} has neither website nor twitter handle"
        )
    return " OR ".join(clauses) + " " + RETWEET_EXCLUSION
