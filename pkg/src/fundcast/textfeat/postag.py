"""Coarse rule-based part-of-speech tagging.

Layered rules: closed-class lexicon first, then suffix heuristics, then a
NOUN default. Digits map to NUM, detached punctuation to PUNCT, and
non-word tokens (URLs, mentions, hashtags, emoji) to OTHER.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from importlib import resources

from ..errors import EmptyInputError


class PosTag(enum.Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    AUX = "AUX"
    ADJ = "ADJ"
    ADV = "ADV"
    PRON = "PRON"
    DET = "DET"
    ADP = "ADP"
    NUM = "NUM"
    CONJ = "CONJ"
    PUNCT = "PUNCT"
    OTHER = "OTHER"


@lru_cache(maxsize=1)
def closed_class_lexicon() -> dict[str, PosTag]:
    lexicon: dict[str, PosTag] = {}
    data = resources.files("fundcast.textfeat").joinpath("data/pos_closed_class.txt")
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        if word in lexicon:
            raise ValueError(f"duplicate closed-class entry: {word}")
        lexicon[word] = PosTag[tag]
    return lexicon


_SUFFIX_RULES = (
    ("ly", PosTag.ADV),
    ("ing", PosTag.VERB),
    ("ed", PosTag.VERB),
    ("tion", PosTag.NOUN),
    ("ness", PosTag.NOUN),
    ("ous", PosTag.ADJ),
    ("ful", PosTag.ADJ),
)


def tag_word(surface: str) -> PosTag:
    """Tag a single word token (callers handle punctuation/URL specials)."""
    lowered = surface.lower()
    if lowered and all(ch.isdigit() or ch in ".,%" for ch in lowered) and any(ch.isdigit() for ch in lowered):
        return PosTag.NUM
    tag = closed_class_lexicon().get(lowered)
    if tag is not None:
        return tag
    for suffix, suffix_tag in _SUFFIX_RULES:
        if lowered.endswith(suffix) and len(lowered) > len(suffix) + 1:
            return suffix_tag
    return PosTag.NOUN


def pos_distribution(tokenized) -> dict[PosTag, float]:
    """Fraction of tokens per tag; fractions over all tokens sum to 1."""
    tokens = tokenized.tokens
    if not tokens:
        raise EmptyInputError("cannot compute a POS distribution over zero tokens")
    counts: dict[PosTag, int] = {}
    for token in tokens:
        counts[token.tag] = counts.get(token.tag, 0) + 1
    total = len(tokens)
    return {tag: count / total for tag, count in counts.items()}
