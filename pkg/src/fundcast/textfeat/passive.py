"""Passive-voice counting via a be-verb + past-participle window pattern."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .postag import PosTag
from .tokenizer import TokenizedText

_BE_FORMS = {"am", "is", "are", "was", "were", "be", "been", "being"}
_LOOKAHEAD = 2  # non-adverb tokens inspected after a be-form


@lru_cache(maxsize=1)
def irregular_participles() -> frozenset[str]:
    data = resources.files("fundcast.textfeat").joinpath("data/irregular_participles.txt")
    words = set()
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def _participle_shaped(surface: str) -> bool:
    lowered = surface.lower()
    if lowered in _BE_FORMS:
        return False
    return (lowered.endswith("ed") and len(lowered) > 3) or lowered in irregular_participles()


def passive_voice_count(tokenized: TokenizedText) -> int:
    """Count be-form tokens followed within two tokens (adverbs skipped) by a
    past-participle-shaped token."""
    tokens = tokenized.tokens
    count = 0
    for i, token in enumerate(tokens):
        if token.surface.lower() not in _BE_FORMS:
            continue
        inspected = 0
        j = i + 1
        while j < len(tokens) and inspected < _LOOKAHEAD:
            candidate = tokens[j]
            if candidate.tag == PosTag.ADV:
                j += 1
                continue
            if candidate.tag == PosTag.PUNCT:
                break
            if _participle_shaped(candidate.surface):
                count += 1
                break
            inspected += 1
            j += 1
    return count
