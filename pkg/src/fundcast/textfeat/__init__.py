"""Pure-function linguistic analysis for tweet-sized text."""

from .passive import irregular_participles, passive_voice_count
from .postag import PosTag, closed_class_lexicon, pos_distribution, tag_word
from .readability import (
    COMPLEX_WORD_SYLLABLES,
    LONG_WORD_LETTERS,
    ReadabilityStats,
    flesch_reading_ease,
    readability_stats,
)
from .sentiment import (
    LexiconScorer,
    TextScorer,
    normalize_compound,
    sentiment_compound,
    sentiment_lexicon,
)
from .surface import (
    SurfaceCounts,
    distinct_language_count,
    is_emoji,
    script_class,
    surface_counts,
)
from .syllables import count_syllables
from .tokenizer import Token, TokenizedText, shape_signature_count, tokenize

__all__ = [
    "COMPLEX_WORD_SYLLABLES",
    "LONG_WORD_LETTERS",
    "LexiconScorer",
    "PosTag",
    "ReadabilityStats",
    "SurfaceCounts",
    "TextScorer",
    "Token",
    "TokenizedText",
    "closed_class_lexicon",
    "count_syllables",
    "distinct_language_count",
    "flesch_reading_ease",
    "irregular_participles",
    "is_emoji",
    "normalize_compound",
    "passive_voice_count",
    "pos_distribution",
    "readability_stats",
    "script_class",
    "sentiment_compound",
    "sentiment_lexicon",
    "shape_signature_count",
    "surface_counts",
    "tag_word",
    "tokenize",
]
