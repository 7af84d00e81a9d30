"""Readability statistics and the Flesch Reading-Ease score."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UndefinedMetricError
from .postag import PosTag
from .syllables import count_syllables
from .tokenizer import TokenizedText

LONG_WORD_LETTERS = 7    # long word: strictly more letters than this
COMPLEX_WORD_SYLLABLES = 3  # complex word: strictly more syllables than this


@dataclass(frozen=True)
class ReadabilityStats:
    word_count: int
    sentence_count: int
    syllable_count: int
    long_word_count: int
    complex_word_count: int
    flesch_score: float


def flesch_reading_ease(word_count: int, sentence_count: int, syllable_count: int) -> float:
    """206.835 - 1.015*(words/sentences) - 84.6*(syllables/words)."""
    if word_count < 1 or sentence_count < 1:
        raise UndefinedMetricError("Flesch score needs at least one word and one sentence")
    return (
        206.835
        - 1.015 * (word_count / sentence_count)
        - 84.6 * (syllable_count / word_count)
    )


def readability_stats(tokenized: TokenizedText) -> ReadabilityStats:
    """Aggregate word/sentence/syllable statistics over tokenized text.

    Words are tokens outside PUNCT/OTHER; syllables are counted for
    letter-bearing words only; a text with zero words scores 0.
    """
    words = [
        t.surface
        for t in tokenized.tokens
        if t.tag not in (PosTag.PUNCT, PosTag.OTHER)
    ]
    word_count = len(words)
    sentence_count = len(tokenized.sentences)
    syllables = 0
    long_words = 0
    complex_words = 0
    for word in words:
        letters = sum(1 for ch in word if ch.isalpha())
        if letters > LONG_WORD_LETTERS:
            long_words += 1
        if letters == 0:
            continue
        n_syll = count_syllables(word)
        syllables += n_syll
        if n_syll > COMPLEX_WORD_SYLLABLES:
            complex_words += 1
    if word_count >= 1 and sentence_count >= 1:
        flesch = flesch_reading_ease(word_count, sentence_count, syllables)
    else:
        flesch = 0.0
    return ReadabilityStats(
        word_count=word_count,
        sentence_count=sentence_count,
        syllable_count=syllables,
        long_word_count=long_words,
        complex_word_count=complex_words,
        flesch_score=flesch,
    )
