"""Whitespace/punctuation tokenizer tuned for tweets.

URLs, @mentions, and #hashtags survive as single tokens; other punctuation
is detached into its own tokens. Sentences end at . ! ? followed by
whitespace or end of text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .postag import PosTag, tag_word

_CHUNK = re.compile(r"\S+")
_URL_PREFIX = re.compile(r"https?://\S+")
_TAGLIKE = re.compile(r"[@#]\w+")
_WORD_RUN = re.compile(r"\w+(?:['’]\w+)*", re.UNICODE)
_ASCII_PUNCT = set("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~’‘“”…–—")
_SENT_END = {".", "!", "?"}


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    tag: PosTag


@dataclass(frozen=True)
class TokenizedText:
    sentences: list[list[Token]]
    tokens: list[Token]


def _classify(surface: str, kind: str) -> PosTag:
    if kind == "special":
        return PosTag.OTHER
    if kind == "punct":
        return PosTag.PUNCT
    if kind == "symbol":
        return PosTag.OTHER
    return tag_word(surface)


def _split_chunk(chunk: str, offset: int) -> list[tuple[str, int, str]]:
    """Break one whitespace-delimited chunk into (surface, start, kind) parts."""
    url = _URL_PREFIX.match(chunk)
    if url:
        return [(chunk, offset, "special")]
    parts: list[tuple[str, int, str]] = []
    pos = 0
    while pos < len(chunk):
        ch = chunk[pos]
        if ch in "@#":
            tag = _TAGLIKE.match(chunk, pos)
            if tag:
                parts.append((tag.group(), offset + pos, "special"))
                pos = tag.end()
                continue
        word = _WORD_RUN.match(chunk, pos)
        if word:
            parts.append((word.group(), offset + pos, "word"))
            pos = word.end()
            continue
        kind = "punct" if ch in _ASCII_PUNCT else "symbol"
        parts.append((ch, offset + pos, kind))
        pos += 1
    return parts


def tokenize(text: str) -> TokenizedText:
    tokens: list[Token] = []
    sentences: list[list[Token]] = []
    current: list[Token] = []
    for chunk in _CHUNK.finditer(text):
        for surface, start, kind in _split_chunk(chunk.group(), chunk.start()):
            end = start + len(surface)
            token = Token(surface, start, end, _classify(surface, kind))
            tokens.append(token)
            current.append(token)
            boundary = end >= len(text) or text[end].isspace()
            if kind == "punct" and surface in _SENT_END and boundary:
                sentences.append(current)
                current = []
    if current:
        sentences.append(current)
    return TokenizedText(sentences=sentences, tokens=tokens)


def shape_signature_count(tokenized: TokenizedText) -> int:
    """Distinct upper/lower/digit shape patterns across a text's tokens."""
    shapes = set()
    for token in tokenized.tokens:
        shape = []
        for ch in token.surface:
            if ch.isdigit():
                shape.append("d")
            elif ch.isalpha():
                shape.append("X" if ch.isupper() else "x")
            else:
                shape.append("-")
        shapes.add("".join(shape))
    return len(shapes)
