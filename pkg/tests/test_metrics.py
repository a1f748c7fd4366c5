from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sklearn.metrics import adjusted_rand_score, normalized_mutual_info_score

from dmcs import ari, best_against_overlapping, binarize, fscore, nmi
from dmcs.errors import NotApplicableError
from dmcs.metrics import Contingency


def test_binarize_examples():
    assert binarize({0, 1, 2}, {0, 1, 2}, 6) == (3, 0, 0, 3)
    assert binarize({0, 1}, {2, 3}, 6) == (0, 2, 2, 2)
    assert binarize({1, 2, 3}, {1, 2, 4}, 6) == (2, 1, 1, 2)


def test_binarize_range_check():
    with pytest.raises(ValueError):
        binarize({6}, {0}, 6)


def test_nmi_examples():
    assert nmi(binarize({1, 2}, {1, 2}, 5)) == 1.0
    assert nmi(binarize(range(6), {1, 2}, 6)) == 0.0
    assert nmi(binarize({1, 2, 3}, {1, 2, 4}, 6)) == pytest.approx(0.0817, abs=1e-4)


def test_ari_examples():
    assert ari(binarize({1, 2}, {1, 2}, 5)) == 1.0
    assert ari(binarize({1, 2, 3}, {1, 2, 4}, 6)) == pytest.approx(-1 / 9, abs=1e-12)
    assert ari(binarize({0, 1, 2}, {3, 4, 5}, 6)) == pytest.approx(1.0)
    assert ari(binarize(range(4), range(4), 4)) == 1.0


def _pair_count_ari(pred, truth, n):
    a = [int(v in pred) for v in range(n)]
    b = [int(v in truth) for v in range(n)]
    pairs = list(combinations(range(n), 2))
    both = sum(a[i] == a[j] and b[i] == b[j] for i, j in pairs)
    sa = sum(a[i] == a[j] for i, j in pairs)
    sb = sum(b[i] == b[j] for i, j in pairs)
    exp = sa * sb / len(pairs)
    return (both - exp) / ((sa + sb) / 2 - exp)


def test_ari_pair_brute_force():
    assert ari(binarize({1, 2, 3}, {1, 2, 4}, 6)) == pytest.approx(_pair_count_ari({1, 2, 3}, {1, 2, 4}, 6))


def test_fscore_examples():
    assert fscore(binarize({1, 2}, {1, 2}, 5)) == 1.0
    assert fscore(binarize({1, 2, 3}, {1, 2, 4}, 6)) == pytest.approx(2 / 3)
    assert fscore(Contingency(0, 2, 2, 2)) == 0.0


subsets = st.sets(st.integers(0, 11), min_size=1, max_size=11)


@given(subsets, subsets)
def test_against_sklearn(pred, truth):
    n = 12
    c = binarize(pred, truth, n)
    a = [int(v in pred) for v in range(n)]
    b = [int(v in truth) for v in range(n)]
    assert ari(c) == pytest.approx(adjusted_rand_score(b, a), abs=1e-12)
    if 0 < len(pred) < n and 0 < len(truth) < n:
        ref = normalized_mutual_info_score(b, a, average_method="arithmetic")
        assert nmi(c) == pytest.approx(ref, abs=1e-12)


@given(subsets, subsets)
def test_symmetric_and_bounded(pred, truth):
    c1, c2 = binarize(pred, truth, 12), binarize(truth, pred, 12)
    for f in (nmi, ari, fscore):
        assert f(c1) == pytest.approx(f(c2), abs=1e-12)
    assert 0 <= nmi(c1) <= 1
    assert ari(c1) <= 1 + 1e-12
    assert 0 <= fscore(c1) <= 1
    if pred == truth and len(pred) < 12:
        assert (nmi(c1), ari(c1), fscore(c1)) == (1.0, 1.0, 1.0)
    if pred != truth:
        assert fscore(c1) < 1


@given(subsets, subsets)
def test_dropping_false_positive_keeps_precision(pred, truth):
    fp = sorted(pred - truth)
    if not fp or len(pred) < 2:
        return
    c1 = binarize(pred, truth, 12)
    c2 = binarize(pred - {fp[0]}, truth, 12)
    p1 = c1.n11 / (c1.n11 + c1.n10)
    p2 = c2.n11 / (c2.n11 + c2.n10)
    assert p2 >= p1


def test_best_single_truth():
    rep = best_against_overlapping({0, 1, 2}, [{0, 1, 3}], 8, [0])
    assert rep.matched_truth == 0
    assert rep.fscore == pytest.approx(2 / 3)


def test_best_exact_match():
    truths = [{0, 1}, {0, 2, 3}, {0, 4, 5}]
    rep = best_against_overlapping({0, 2, 3}, truths, 10, [0])
    assert (rep.nmi, rep.ari, rep.fscore, rep.matched_truth) == (1.0, 1.0, 1.0, 1)


def test_best_straddling():
    truths = [{0, 1, 2, 3}, {0, 4, 5}]
    pred = {0, 1, 2, 4}
    scores = [nmi(binarize(pred, t, 10)) for t in truths]
    rep = best_against_overlapping(pred, truths, 10, [0])
    assert rep.matched_truth == scores.index(max(scores)) == 0


def test_best_skips_truths_without_query():
    rep = best_against_overlapping({5, 6}, [{5, 6}, {0, 1}], 8, [0])
    assert rep.matched_truth == 1 and rep.fscore == 0.0
    with pytest.raises(NotApplicableError):
        best_against_overlapping({0}, [{1, 2}], 5, [0])
