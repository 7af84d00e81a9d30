"""Classification metrics, the F-beta family, and cutoff sweeps.

Positive classification is probability >= cutoff (inclusive). F-beta uses
(1 + b^2) P R / (b^2 P + R) and is defined as 0 when precision and recall
are both 0; beta defaults to 0.1 to weight precision heavily.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_BETA = 0.1

CANONICAL_CUTOFFS = (
    0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95, 0.97, 0.99,
)


def f_beta(precision: float, recall: float, beta: float = DEFAULT_BETA) -> float:
    if precision == 0.0 and recall == 0.0:
        return 0.0
    b2 = beta * beta
    denominator = b2 * precision + recall
    if denominator == 0.0:
        return 0.0
    return (1.0 + b2) * precision * recall / denominator


@dataclass(frozen=True)
class MetricsReport:
    precision: float
    recall: float
    f1: float
    f_beta: float
    beta: float
    true_positives: int
    false_positives: int
    true_negatives: int
    false_negatives: int

    @property
    def predicted_positives(self) -> int:
        return self.true_positives + self.false_positives


def compute_metrics(labels, probabilities, cutoff: float,
                    beta: float = DEFAULT_BETA) -> MetricsReport:
    y = np.asarray(labels)
    p = np.asarray(probabilities, dtype=float)
    if len(y) != len(p):
        raise ValueError("labels and probabilities must align")
    predicted = p >= cutoff
    tp = int(np.sum(predicted & (y == 1)))
    fp = int(np.sum(predicted & (y == 0)))
    fn = int(np.sum(~predicted & (y == 1)))
    tn = int(np.sum(~predicted & (y == 0)))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    return MetricsReport(
        precision=precision,
        recall=recall,
        f1=f_beta(precision, recall, 1.0),
        f_beta=f_beta(precision, recall, beta),
        beta=beta,
        true_positives=tp,
        false_positives=fp,
        true_negatives=tn,
        false_negatives=fn,
    )


@dataclass(frozen=True)
class CutoffSweep:
    entries: tuple[tuple[float, MetricsReport], ...]
    best_cutoff: float
    beta: float


def sweep_cutoffs(labels, probabilities, beta: float = DEFAULT_BETA,
                  cutoffs=CANONICAL_CUTOFFS) -> CutoffSweep:
    """Metrics at each canonical cutoff plus the argmax-F_beta cutoff
    (ties -> lowest cutoff)."""
    ordered = tuple(sorted(cutoffs))
    entries = tuple(
        (cutoff, compute_metrics(labels, probabilities, cutoff, beta))
        for cutoff in ordered
    )
    best_cutoff = max(entries, key=lambda pair: (pair[1].f_beta, -pair[0]))[0]
    return CutoffSweep(entries=entries, best_cutoff=best_cutoff, beta=beta)


def roc_auc(labels, scores) -> float:
    """Rank-based AUC with midrank tie handling."""
    y = np.asarray(labels, dtype=float)
    s = np.asarray(scores, dtype=float)
    n_pos = float(y.sum())
    n_neg = float(len(y) - n_pos)
    if n_pos == 0 or n_neg == 0:
        raise ValueError("AUC needs both classes")
    order = np.argsort(s, kind="stable")
    ranks = np.empty(len(s), dtype=float)
    sorted_scores = s[order]
    i = 0
    while i < len(s):
        j = i
        while j + 1 < len(s) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    positive_rank_sum = float(ranks[y == 1].sum())
    return (positive_rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)
