"""Lexicon-based sentiment scoring following the published VADER rule set.

The pipeline: token valence lookup, booster/dampener words with distance
decay, negation flip within a three-token window, ALL-CAPS emphasis,
contrastive "but" reweighting, exclamation/question amplification, and
x/sqrt(x^2 + 15) compound normalization into [-1, 1].
"""

from __future__ import annotations

import math
import string
from functools import lru_cache
from importlib import resources
from typing import Protocol

BOOST_UP = 0.293
BOOST_DOWN = -0.293
CAPS_BUMP = 0.733
NEGATION_FACTOR = -0.74
NEVER_SO_FACTOR = 1.25
BUT_BEFORE = 0.5
BUT_AFTER = 1.5
EXCLAMATION_BUMP = 0.292
MAX_EXCLAMATIONS = 4
NORMALIZATION_ALPHA = 15

NEGATIONS = frozenset(
    """aint arent cannot cant couldnt darent didnt doesnt ain't aren't can't
    couldn't daren't didn't doesn't dont hadnt hasnt havent isnt mightnt
    mustnt neither don't hadn't hasn't haven't isn't mightn't mustn't neednt
    needn't never none nope nor not nothing nowhere oughtnt shant shouldnt
    uhuh wasnt werent oughtn't shan't shouldn't uh-uh wasn't weren't without
    wont wouldnt won't wouldn't rarely seldom despite""".split()
)

BOOSTERS = {
    word: BOOST_UP
    for word in """absolutely amazingly awfully completely considerable
    considerably decidedly deeply enormous enormously entirely especially
    exceptional exceptionally extreme extremely fabulously fully greatly
    highly hugely incredible incredibly intensely major majorly more most
    particularly purely quite really remarkably so substantially thoroughly
    total totally tremendous tremendously uber unbelievably unusually utter
    utterly very""".split()
}
BOOSTERS.update(
    {
        word: BOOST_DOWN
        for word in """almost barely hardly kinda kindof kind-of less little
        marginal marginally occasional occasionally partly scarce scarcely
        slight slightly somewhat sorta sortof sort-of""".split()
    }
)
BOOSTERS.update({"just enough": BOOST_DOWN, "kind of": BOOST_DOWN, "sort of": BOOST_DOWN})

IDIOM_VALENCES = {
    "the shit": 3.0,
    "the bomb": 3.0,
    "bad ass": 1.5,
    "badass": 1.5,
    "bus stop": 0.0,
    "yeah right": -2.0,
    "kiss of death": -1.5,
    "to die for": 3.0,
    "beating heart": 3.1,
    "broken heart": -2.9,
}


@lru_cache(maxsize=1)
def sentiment_lexicon() -> dict[str, float]:
    """Bundled term -> valence table on the published [-4, 4] scale."""
    lexicon: dict[str, float] = {}
    data = resources.files("fundcast.textfeat").joinpath("data/sentiment_lexicon.tsv")
    for line in data.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        term, valence = line.split("\t")
        lexicon[term] = float(valence)
    return lexicon


def _scoring_tokens(text: str) -> list[str]:
    """Whitespace tokens with leading/trailing punctuation stripped, unless
    stripping leaves two or fewer characters (keeps emoticons intact)."""
    tokens = []
    for raw in text.split():
        stripped = raw.strip(string.punctuation)
        tokens.append(stripped if len(stripped) > 2 else raw)
    return tokens


def _mixed_case(tokens: list[str]) -> bool:
    caps = sum(1 for t in tokens if t.isupper())
    return 0 < caps < len(tokens)


def _booster_effect(token: str, valence: float, mixed_case: bool) -> float:
    scalar = BOOSTERS.get(token.lower(), 0.0)
    if scalar == 0.0:
        return 0.0
    if valence < 0:
        scalar = -scalar
    if token.isupper() and mixed_case:
        scalar += CAPS_BUMP if valence > 0 else -CAPS_BUMP
    return scalar


def _is_negation(token: str) -> bool:
    lowered = token.lower()
    return lowered in NEGATIONS or "n't" in lowered


def _negation_adjust(valence: float, lowered: list[str], distance: int, i: int) -> float:
    """Apply negation flips for the context token ``distance + 1`` back."""
    if distance == 0:
        if _is_negation(lowered[i - 1]):
            valence *= NEGATION_FACTOR
    elif distance == 1:
        if lowered[i - 2] == "never" and lowered[i - 1] in ("so", "this"):
            valence *= NEVER_SO_FACTOR
        elif lowered[i - 2] == "without" and lowered[i - 1] == "doubt":
            pass
        elif _is_negation(lowered[i - 2]):
            valence *= NEGATION_FACTOR
    elif distance == 2:
        if lowered[i - 3] == "never" and (
            lowered[i - 2] in ("so", "this") or lowered[i - 1] in ("so", "this")
        ):
            valence *= NEVER_SO_FACTOR
        elif lowered[i - 3] == "without" and "doubt" in (lowered[i - 2], lowered[i - 1]):
            pass
        elif _is_negation(lowered[i - 3]):
            valence *= NEGATION_FACTOR
    return valence


def _idiom_adjust(valence: float, lowered: list[str], i: int) -> float:
    """Override valence for known idioms ending at or just after token i and
    apply booster bigrams like "sort of"."""
    one_zero = f"{lowered[i - 1]} {lowered[i]}"
    two_one_zero = f"{lowered[i - 2]} {lowered[i - 1]} {lowered[i]}"
    two_one = f"{lowered[i - 2]} {lowered[i - 1]}"
    three_two_one = f"{lowered[i - 3]} {lowered[i - 2]} {lowered[i - 1]}"
    three_two = f"{lowered[i - 3]} {lowered[i - 2]}"
    for phrase in (one_zero, two_one_zero, two_one, three_two_one, three_two):
        if phrase in IDIOM_VALENCES:
            valence = IDIOM_VALENCES[phrase]
            break
    for phrase in (three_two_one, three_two, two_one):
        if phrase in BOOSTERS:
            valence += BOOSTERS[phrase]
    return valence


def _least_adjust(valence: float, lowered: list[str], lexicon: dict[str, float], i: int) -> float:
    if i > 0 and lowered[i - 1] == "least" and lowered[i - 1] not in lexicon:
        if i > 1 and lowered[i - 2] in ("at", "very"):
            return valence
        return valence * NEGATION_FACTOR
    return valence


def _token_valence(tokens: list[str], lowered: list[str], i: int, mixed_case: bool,
                   lexicon: dict[str, float]) -> float:
    item = lowered[i]
    valence = lexicon[item]
    if item == "no" and i + 1 < len(tokens) and lowered[i + 1] in lexicon:
        valence = 0.0
    if (
        (i > 0 and lowered[i - 1] == "no")
        or (i > 1 and lowered[i - 2] == "no")
        or (i > 2 and lowered[i - 3] == "no" and lowered[i - 1] in ("or", "nor"))
    ):
        valence = lexicon[item] * NEGATION_FACTOR
    if tokens[i].isupper() and mixed_case:
        valence += CAPS_BUMP if valence > 0 else -CAPS_BUMP
    for distance in range(3):
        back = i - (distance + 1)
        if back < 0 or lowered[back] in lexicon:
            continue
        effect = _booster_effect(tokens[back], valence, mixed_case)
        if effect != 0.0 and distance == 1:
            effect *= 0.95
        elif effect != 0.0 and distance == 2:
            effect *= 0.9
        valence += effect
        valence = _negation_adjust(valence, lowered, distance, i)
        if distance == 2:
            valence = _idiom_adjust(valence, lowered, i)
    return _least_adjust(valence, lowered, lexicon, i)


def _punctuation_emphasis(text: str) -> float:
    bumps = min(text.count("!"), MAX_EXCLAMATIONS) * EXCLAMATION_BUMP
    questions = text.count("?")
    if questions > 1:
        bumps += questions * 0.18 if questions <= 3 else 0.96
    return bumps


def normalize_compound(score: float) -> float:
    normalized = score / math.sqrt(score * score + NORMALIZATION_ALPHA)
    return max(-1.0, min(1.0, normalized))


def sentiment_compound(text: str) -> float:
    """Compound sentiment of ``text`` in [-1, 1]; empty or neutral text -> 0."""
    if not text:
        return 0.0
    lexicon = sentiment_lexicon()
    tokens = _scoring_tokens(text)
    lowered = [t.lower() for t in tokens]
    mixed_case = _mixed_case(tokens)
    valences: list[float] = []
    for i, token in enumerate(tokens):
        if lowered[i] in BOOSTERS or (
            i + 1 < len(tokens) and lowered[i] == "kind" and lowered[i + 1] == "of"
        ):
            valences.append(0.0)
            continue
        if lowered[i] in lexicon:
            valences.append(_token_valence(tokens, lowered, i, mixed_case, lexicon))
        else:
            valences.append(0.0)
    if "but" in lowered:
        pivot = lowered.index("but")
        valences = [
            v * (BUT_BEFORE if i < pivot else BUT_AFTER if i > pivot else 1.0)
            for i, v in enumerate(valences)
        ]
    total = float(sum(valences))
    if total == 0.0:
        return 0.0
    emphasis = _punctuation_emphasis(text)
    total += emphasis if total > 0 else -emphasis
    return normalize_compound(total)


class TextScorer(Protocol):
    """Pluggable per-text scorer; stands in for heavyweight model scorers."""

    def score(self, text: str) -> float: ...


class LexiconScorer:
    """Default TextScorer: the lexicon compound score."""

    def score(self, text: str) -> float:
        return sentiment_compound(text)
