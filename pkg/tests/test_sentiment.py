"""Sentiment scoring against the transcribed reference implementation.

FROZEN_CORPUS values were produced by tests/_vader_reference.py (the
literal transcription of the published compound-score algorithm) over the
bundled lexicon; the package implementation must stay within 1e-4.
"""

import random

import pytest

from fundcast.textfeat import normalize_compound, sentiment_compound, sentiment_lexicon

from _vader_reference import ReferenceIntensityAnalyzer

FROZEN_CORPUS = [
    ("good", 0.4404),
    ("The product is good", 0.4404),
    ("The product is very good", 0.4927),
    ("The product is really very good", 0.5379),
    ("The product is not good", -0.3412),
    ("The product is extremely good!", 0.54),
    ("The launch was great", 0.7269),
    ("GREAT launch today", 0.7804),
    ("This startup is amazing and the team is brilliant", 0.5859),
    ("Funding round failed badly", -0.5106),
    ("The demo was terrible", -0.4767),
    ("The demo was not terrible", 0.3724),
    ("The demo wasn't great", -0.5096),
    ("Investors love the new platform", 0.6369),
    ("Investors don't love the new platform", -0.5216),
    ("We are thrilled to announce our seed round", 0.5719),
    ("Layoffs announced after the funding crisis", -0.7783),
    ("The outage was a disaster for users", -0.7845),
    ("Slightly disappointing quarterly growth", -0.1206),
    ("An incredibly impressive pitch deck", 0.5563),
    ("The founders are hardly competent", 0.2975),
    ("Never so proud of this team", 0.6269),
    ("I was never happy with the old tool", -0.4585),
    ("At least the beta works", 0.0),
    ("The least useful feature shipped so far", -0.3252),
    ("The product is slow but investors love it", 0.743),
    ("The app is beautiful but the pricing is terrible", -0.4019),
    ("What a fantastic milestone for the company!!!", 0.795),
    ("Is this even profitable???", 0.5484),
    ("Our users are happy :)", 0.7717),
    ("Churn is rising :(", -0.4404),
    ("huge win for the whole team <3", 0.8555),
    ("The migration was kind of fun", 0.4601),
    ("The roadmap is sort of promising", 0.3832),
    ("This is utterly fantastic news for shareholders", 0.5984),
    ("The rebrand was barely noticeable and mostly fine", 0.2023),
    ("A truly horrible quarter for hardware startups", -0.5423),
    ("Revenue growth looks SUPER strong this year", 0.8893),
    ("The board was deeply disappointed by the numbers", -0.5413),
    ("Nothing exciting shipped this sprint", -0.3875),
    ("The keynote felt flat and boring", -0.3182),
    ("Customers trust the platform again", 0.4767),
    ("Without doubt the best release yet", 0.738),
    ("The pivot was risky yet successful", 0.34),
    ("Their support team is awesome!", 0.7959),
    ("Shipping delays hurt the brand", -0.4939),
    ("marginally better onboarding this release", 0.3832),
    ("The acquisition fell through and morale is low", 0.0),
    ("Seed investors remain optimistic about the roadmap", 0.4404),
    ("The quarterly report mentions steady progress", 0.3818),
]


def test_corpus_has_fifty_sentences():
    assert len(FROZEN_CORPUS) == 50


@pytest.mark.parametrize("text,expected", FROZEN_CORPUS)
def test_matches_frozen_reference_values(text, expected):
    assert sentiment_compound(text) == pytest.approx(expected, abs=1e-4)


def test_matches_live_reference_on_corpus():
    analyzer = ReferenceIntensityAnalyzer()
    for text, _ in FROZEN_CORPUS:
        assert sentiment_compound(text) == pytest.approx(analyzer.compound(text), abs=1e-4)


def test_empty_text_scores_zero():
    assert sentiment_compound("") == 0.0
    assert sentiment_compound("   ") == 0.0


def test_neutral_text_scores_zero():
    assert sentiment_compound("the spreadsheet contains twelve columns") == 0.0


def test_compound_bounded_for_random_inputs():
    rng = random.Random(20240817)
    vocab = list(sentiment_lexicon()) + ["the", "very", "not", "!!!", "???", "TEAM", "and"]
    for _ in range(300):
        text = " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 12)))
        assert -1.0 <= sentiment_compound(text) <= 1.0


def test_negation_flips_sign():
    assert sentiment_compound("good") > 0
    assert sentiment_compound("not good") < 0


def test_booster_amplifies():
    assert sentiment_compound("very good") > sentiment_compound("good")
    assert sentiment_compound("slightly good") < sentiment_compound("good")


def test_caps_emphasis_applies_in_mixed_case_text():
    assert sentiment_compound("the launch was GREAT") > sentiment_compound("the launch was great")


def test_exclamation_amplifies():
    assert sentiment_compound("good!") > sentiment_compound("good")
    assert sentiment_compound("terrible!") < sentiment_compound("terrible")


def test_normalize_is_bounded_and_odd():
    assert normalize_compound(0.0) == 0.0
    assert normalize_compound(1e9) == 1.0
    assert normalize_compound(-1e9) == -1.0
    assert normalize_compound(2.0) == pytest.approx(-normalize_compound(-2.0))
