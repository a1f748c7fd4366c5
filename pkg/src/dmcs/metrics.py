"""Accuracy of one found community against ground truth.

The found community and a truth community each split the node set in two;
scores compare those two binary partitions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import NotApplicableError


class Contingency(NamedTuple):
    n11: int  # in both
    n10: int  # predicted only
    n01: int  # truth only
    n00: int  # in neither


@dataclass(frozen=True)
class EvalReport:
    nmi: float
    ari: float
    fscore: float
    matched_truth: int


def binarize(community: Iterable[int], truth: Iterable[int], n: int) -> Contingency:
    pred, true = set(community), set(truth)
    for v in pred | true:
        if not 0 <= v < n:
            raise ValueError(f"node {v} outside 0..{n - 1}")
    n11 = len(pred & true)
    n10 = len(pred) - n11
    n01 = len(true) - n11
    return Contingency(n11, n10, n01, n - n11 - n10 - n01)


def _same_partition(c: Contingency) -> bool:
    # binary partitions are equal up to swapping labels
    return (c.n10 == 0 and c.n01 == 0) or (c.n11 == 0 and c.n00 == 0)


def _entropy(counts, n) -> float:
    return -sum(x / n * math.log(x / n) for x in counts if x)


def nmi(c: Contingency) -> float:
    """``2 I(X;Y) / (H(X) + H(Y))`` in nats.

    If either partition has zero entropy the score is 1 for identical
    partitions and 0 otherwise.
    """
    n = sum(c)
    if n < 1:
        raise ValueError("empty contingency table")
    rows = (c.n11 + c.n10, c.n01 + c.n00)
    cols = (c.n11 + c.n01, c.n10 + c.n00)
    hx, hy = _entropy(rows, n), _entropy(cols, n)
    if _same_partition(c):
        return 1.0
    if hx == 0 or hy == 0:
        return 0.0
    cells = ((c.n11, 0, 0), (c.n10, 0, 1), (c.n01, 1, 0), (c.n00, 1, 1))
    mi = sum(x / n * math.log(x * n / (rows[i] * cols[j])) for x, i, j in cells if x)
    return max(0.0, min(1.0, 2 * mi / (hx + hy)))


def _pairs(x) -> int:
    return x * (x - 1) // 2


def ari(c: Contingency) -> float:
    """Hubert-Arabie adjusted Rand index of the two binary partitions."""
    n = sum(c)
    index = sum(_pairs(x) for x in c)
    a = _pairs(c.n11 + c.n10) + _pairs(c.n01 + c.n00)
    b = _pairs(c.n11 + c.n01) + _pairs(c.n10 + c.n00)
    total = _pairs(n)
    if total == 0:
        return 1.0
    expected = a * b / total
    top = (a + b) / 2
    if top == expected:
        return 1.0 if _same_partition(c) else 0.0
    return (index - expected) / (top - expected)


def fscore(c: Contingency) -> float:
    if c.n11 == 0:
        return 0.0
    precision = c.n11 / (c.n11 + c.n10)
    recall = c.n11 / (c.n11 + c.n01)
    return 2 * precision * recall / (precision + recall)


def evaluate(community: Iterable[int], truth: Iterable[int], n: int, index: int = 0) -> EvalReport:
    c = binarize(community, truth, n)
    return EvalReport(nmi(c), ari(c), fscore(c), index)


def best_against_overlapping(pred: Iterable[int], truths: Sequence[Iterable[int]],
                             n: int, query: Iterable[int]) -> EvalReport:
    """Best report over the truth communities that contain every query node.

    Ranked by NMI, then ARI, then lower truth index. Raises
    ``NotApplicableError`` if no truth community holds all the queries.
    """
    pred = set(pred)
    query = set(query)
    best = None
    for i, t in enumerate(truths):
        t = set(t)
        if not query <= t:
            continue
        rep = evaluate(pred, t, n, i)
        if best is None or (rep.nmi, rep.ari) > (best.nmi, best.ari):
            best = rep
    if best is None:
        raise NotApplicableError("no ground-truth community contains all query nodes")
    return best
