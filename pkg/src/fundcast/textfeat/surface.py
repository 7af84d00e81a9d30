"""Surface-level tweet measurements: hashtags, mentions, links, emoji, scripts."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

_HASHTAG = re.compile(r"(?:^|\s)#\w", re.UNICODE)
_MENTION = re.compile(r"(?:^|\s)@\w", re.UNICODE)
_LINK = re.compile(r"https?://")


@dataclass(frozen=True)
class SurfaceCounts:
    hashtags: int
    mentions: int
    links: int
    emojis: int


@lru_cache(maxsize=1)
def emoji_ranges() -> tuple[tuple[int, int], ...]:
    data = resources.files("fundcast.textfeat").joinpath("data/emoji_ranges.txt")
    ranges = []
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        span = line.split("\t")[0]
        start, end = span.split("-")
        ranges.append((int(start, 16), int(end, 16)))
    return tuple(sorted(ranges))


def is_emoji(ch: str) -> bool:
    point = ord(ch)
    return any(start <= point <= end for start, end in emoji_ranges())


def surface_counts(text: str) -> SurfaceCounts:
    """Count hashtags, mentions, links, and emoji code points in raw text.

    Hashtags/mentions must start a whitespace-delimited token and be
    followed by at least one word character.
    """
    return SurfaceCounts(
        hashtags=len(_HASHTAG.findall(text)),
        mentions=len(_MENTION.findall(text)),
        links=len(_LINK.findall(text)),
        emojis=sum(1 for ch in text if is_emoji(ch)),
    )


_SCRIPT_RANGES = (
    ("latin", (0x0041, 0x024F)),
    ("cyrillic", (0x0400, 0x04FF)),
    ("arabic", (0x0600, 0x06FF)),
    ("cjk", (0x3040, 0x30FF)),      # kana
    ("cjk", (0x4E00, 0x9FFF)),      # unified ideographs
    ("cjk", (0xAC00, 0xD7AF)),      # hangul
)


def script_class(text: str) -> str | None:
    """Coarse script family of the first classifiable letter, else "other"
    for letter-bearing text outside the known ranges; None without letters."""
    saw_letter = False
    for ch in text:
        if not ch.isalpha():
            continue
        saw_letter = True
        point = ord(ch)
        for name, (start, end) in _SCRIPT_RANGES:
            if start <= point <= end:
                return name
    return "other" if saw_letter else None


def distinct_language_count(tweets) -> int:
    """Distinct language hints across tweets, with a script-class fallback
    for records lacking a hint."""
    seen: set[str] = set()
    for tweet in tweets:
        hint = getattr(tweet, "language_hint", None)
        if hint:
            seen.add(f"hint:{hint}")
            continue
        fallback = script_class(getattr(tweet, "text", "") or "")
        if fallback is not None:
            seen.add(f"script:{fallback}")
    return len(seen)
