"""Heuristic syllable counting: contiguous vowel groups with a silent-e rule."""

from __future__ import annotations

from ..errors import NotAWordError

_VOWELS = set("aeiouy")


def count_syllables(word: str) -> int:
    """Count syllables in ``word``.

    Contiguous runs of a/e/i/o/u/y count one syllable each; a terminal
    silent "e" drops one unless the word ends in consonant+"le"; the result
    never goes below 1.
    """
    letters = [ch for ch in word.lower() if ch.isalpha()]
    if not letters:
        raise NotAWordError(f"no letters to count syllables in: {word!r}")
    groups = 0
    previous_vowel = False
    for ch in letters:
        is_vowel = ch in _VOWELS
        if is_vowel and not previous_vowel:
            groups += 1
        previous_vowel = is_vowel
    word_letters = "".join(letters)
    if word_letters.endswith("e") and groups > 1:
        ends_consonant_le = (
            len(word_letters) >= 3
            and word_letters.endswith("le")
            and word_letters[-3] not in _VOWELS
        )
        if not ends_consonant_le:
            groups -= 1
    return max(groups, 1)
