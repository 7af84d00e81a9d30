"""Ordered target statistics for categorical and text columns.

Training rows are encoded along a permutation: the encoding at position i
uses only labels from positions before i, so later labels can never leak
into earlier encodings. The smoothing prior is the running label mean over
those same earlier positions (0.5 when there is no history yet), which
keeps the no-leakage guarantee airtight. Evaluation rows use full-training
statistics with the full-training mean as the prior.
"""

from __future__ import annotations

import re

import numpy as np

_TEXT_TOKEN = re.compile(r"[a-z0-9']+")


def text_tokens(text: str) -> tuple[str, ...]:
    """Deduplicated lowercased unigrams, sorted for determinism."""
    return tuple(sorted(set(_TEXT_TOKEN.findall(text.lower()))))


def ordered_target_encode(values, labels, permutation, prior_weight: float = 1.0) -> np.ndarray:
    """Encode one categorical column with ordered target statistics.

    encoding(row at position i) =
        (sum of earlier same-category labels + prior_weight * running_mean)
        / (count of earlier same-category rows + prior_weight)
    """
    n = len(values)
    labels = np.asarray(labels, dtype=float)
    out = np.empty(n, dtype=float)
    cat_sum: dict = {}
    cat_count: dict = {}
    seen_sum = 0.0
    for position, row in enumerate(permutation):
        value = values[row]
        running_mean = seen_sum / position if position else 0.5
        s = cat_sum.get(value, 0.0)
        c = cat_count.get(value, 0)
        out[row] = (s + prior_weight * running_mean) / (c + prior_weight)
        y = labels[row]
        cat_sum[value] = s + y
        cat_count[value] = c + 1
        seen_sum += y
    return out


def category_statistics(values, labels) -> tuple[dict, float]:
    """Full-training per-category (label sum, count) plus the global mean."""
    labels = np.asarray(labels, dtype=float)
    stats: dict = {}
    for value, y in zip(values, labels):
        s, c = stats.get(value, (0.0, 0))
        stats[value] = (s + float(y), c + 1)
    global_mean = float(labels.mean()) if len(labels) else 0.5
    return stats, global_mean


def encode_with_statistics(values, stats: dict, global_mean: float,
                           prior_weight: float = 1.0) -> np.ndarray:
    out = np.empty(len(values), dtype=float)
    for i, value in enumerate(values):
        s, c = stats.get(value, (0.0, 0))
        out[i] = (s + prior_weight * global_mean) / (c + prior_weight)
    return out


def ordered_text_encode(texts, labels, permutation, prior_weight: float = 1.0) -> np.ndarray:
    """Encode a text column: a text scores the mean of its tokens' ordered
    statistics; texts without tokens score the running mean."""
    labels = np.asarray(labels, dtype=float)
    tokenized = [text_tokens(t) for t in texts]
    out = np.empty(len(texts), dtype=float)
    tok_sum: dict = {}
    tok_count: dict = {}
    seen_sum = 0.0
    for position, row in enumerate(permutation):
        running_mean = seen_sum / position if position else 0.5
        tokens = tokenized[row]
        if tokens:
            score = 0.0
            for token in tokens:
                s = tok_sum.get(token, 0.0)
                c = tok_count.get(token, 0)
                score += (s + prior_weight * running_mean) / (c + prior_weight)
            out[row] = score / len(tokens)
        else:
            out[row] = running_mean
        y = labels[row]
        for token in tokens:
            tok_sum[token] = tok_sum.get(token, 0.0) + y
            tok_count[token] = tok_count.get(token, 0) + 1
        seen_sum += y
    return out


def token_statistics(texts, labels) -> tuple[dict, float]:
    labels = np.asarray(labels, dtype=float)
    stats: dict = {}
    for text, y in zip(texts, labels):
        for token in text_tokens(text):
            s, c = stats.get(token, (0.0, 0))
            stats[token] = (s + float(y), c + 1)
    global_mean = float(labels.mean()) if len(labels) else 0.5
    return stats, global_mean


def encode_text_with_statistics(texts, stats: dict, global_mean: float,
                                prior_weight: float = 1.0) -> np.ndarray:
    out = np.empty(len(texts), dtype=float)
    for i, text in enumerate(texts):
        tokens = text_tokens(text)
        if not tokens:
            out[i] = global_mean
            continue
        score = 0.0
        for token in tokens:
            s, c = stats.get(token, (0.0, 0))
            score += (s + prior_weight * global_mean) / (c + prior_weight)
        out[i] = score / len(tokens)
    return out
