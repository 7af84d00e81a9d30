"""Publisher and result-host popularity ranks, fitted on training data only."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from urllib.parse import urlsplit

from ..errors import EmptyCorpusError

_NON_ALNUM = re.compile(r"[^a-z0-9]+")


def normalize_publisher(name: str) -> str:
    """Lowercased alphanumeric form used to match publishers to hosts."""
    return _NON_ALNUM.sub("", name.lower())


def registrable_domain(url: str) -> str:
    """Last two host labels of a URL or bare host, lowercased, www-stripped.

    Multi-part public suffixes (co.uk etc.) are not special-cased; fixture
    and synthetic corpora stay on simple TLDs.
    """
    candidate = url.strip().lower()
    if "//" not in candidate:
        candidate = "//" + candidate
    host = urlsplit(candidate).netloc.split("@")[-1].split(":")[0]
    if host.startswith("www."):
        host = host[4:]
    labels = [label for label in host.split(".") if label]
    if len(labels) <= 2:
        return ".".join(labels)
    return ".".join(labels[-2:])


def url_path(url: str) -> str:
    candidate = url.strip()
    if "//" not in candidate:
        candidate = "//" + candidate
    return urlsplit(candidate).path.strip("/").lower()


@dataclass(frozen=True)
class PublisherRank:
    ordered: tuple[str, ...]
    top10: frozenset[str]
    top50: frozenset[str]


def _ranked(counter: Counter) -> list[str]:
    return [name for name, _ in sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))]


def rank_publishers(press) -> PublisherRank:
    """Publishers by article count descending, ties alphabetical."""
    counter = Counter(p.publisher for p in press)
    if not counter:
        raise EmptyCorpusError("cannot rank publishers over an empty press table")
    ordered = _ranked(counter)
    return PublisherRank(
        ordered=tuple(ordered),
        top10=frozenset(ordered[:10]),
        top50=frozenset(ordered[:50]),
    )


@dataclass(frozen=True)
class SiteRank:
    ordered: tuple[str, ...]
    top10: frozenset[str]
    top50: frozenset[str]


def rank_sites(search_responses) -> SiteRank:
    """Most frequent result hosts across training search responses."""
    counter = Counter()
    for response in search_responses:
        for item in response.items:
            host = registrable_domain(item.link)
            if host:
                counter[host] += 1
    ordered = _ranked(counter)
    return SiteRank(
        ordered=tuple(ordered),
        top10=frozenset(ordered[:10]),
        top50=frozenset(ordered[:50]),
    )
