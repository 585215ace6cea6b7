import random

import numpy as np
import pytest
from hypothesis import given

from repmeasure import oracles
from repmeasure.bwt import bwt, cyclic_bwt, inverse_bwt, rotation_order, run_count, runs_of
from repmeasure.suffix import SparseMin, SuffixIndex, cyclic_order, lcp_array, suffix_array
from repmeasure.text import Text, lce

from conftest import words


@pytest.mark.parametrize(
    "s, pi",
    [
        ("aaa", (3, 2, 1, 0)),
        ("ab", (2, 0, 1)),
        ("a", (1, 0)),
        ("abracadabra", (11, 10, 7, 0, 3, 5, 8, 1, 4, 6, 9, 2)),
    ],
)
def test_rotation_order_examples(s, pi):
    assert rotation_order(s).pi == pi
    assert rotation_order(s, method="doubling").pi == pi
    assert rotation_order(s, method="sort").pi == pi
    assert oracles.rotation_order(s) == pi


def test_bwt_examples():
    assert bwt("aaa").bwt == b"aaa\x00"
    assert bwt("aaa").r == 2
    assert bwt("ab").bwt == b"b\x00a"
    assert run_count("ab") == 3
    assert cyclic_bwt("abab").bwt == b"bbaa"
    assert cyclic_bwt("aaaa").bwt == b"aaaa"


def test_runs_of():
    runs = runs_of(b"aabccc")
    assert [(chr(r.symbol), r.start, r.length) for r in runs] == [("a", 1, 2), ("b", 3, 1), ("c", 4, 3)]
    assert runs_of(b"") == ()


def test_unknown_method():
    with pytest.raises(ValueError):
        suffix_array(b"ab", method="nope")


@given(words(max_size=80))
def test_suffix_array_methods_agree(s):
    a = suffix_array(s, "sort")
    b = suffix_array(s, "doubling")
    assert a.tolist() == b.tolist()


@given(words(max_size=40))
def test_bwt_matches_rotation_sort(s):
    assert bwt(s).bwt == oracles.bwt(s)
    assert cyclic_bwt(s).bwt == oracles.cyclic_bwt(s)


@given(words(max_size=60))
def test_inverse_round_trip(s):
    assert inverse_bwt(bwt(s).bwt) == s + b"\x00"


def test_long_inputs_use_doubling():
    rng = random.Random(3)
    s = bytes(rng.choice(b"ab") for _ in range(500))
    assert bwt(s).bwt == oracles.bwt(s)


@given(words(max_size=40))
def test_cyclic_order_ties_by_index(s):
    order = cyclic_order(s).tolist()
    keys = [s[p:] + s[:p] for p in order]
    assert keys == sorted(keys)
    for a, b in zip(order, order[1:]):
        if s[a:] + s[:a] == s[b:] + s[:b]:
            assert a < b


@given(words(max_size=50))
def test_lcp_and_lce(s):
    sa = suffix_array(s)
    lcp = lcp_array(s, sa)
    padded = s + b"\x00"
    for r in range(1, len(sa)):
        x, y = padded[sa[r - 1] - 1 :], padded[sa[r] - 1 :]
        k = 0
        while x[k] == y[k] and x[k]:
            k += 1
        assert lcp[r] == k
    idx = SuffixIndex(s)
    t = Text(s)
    p = np.repeat(np.arange(1, len(s) + 2), len(s) + 1)
    q = np.tile(np.arange(1, len(s) + 2), len(s) + 1)
    got = idx.lce(p, q)
    for a, b, k in zip(p.tolist(), q.tolist(), got.tolist()):
        if a == b:
            assert k == len(s) + 1 - a
        elif a <= len(s) and b <= len(s):
            assert k == lce(t, a, b)
        else:
            assert k == 0


@given(words(max_size=40))
def test_interval_start_finds_leftmost_rank(s):
    idx = SuffixIndex(s)
    n = len(s)
    ranks = np.arange(n + 1)
    for depth in range(1, 4):
        got = idx.interval_start(ranks, np.full(n + 1, depth))
        for r, lb in zip(ranks.tolist(), got.tolist()):
            x = r
            while x >= 1 and idx.lcp[x] >= depth:
                x -= 1
            assert lb == x


def test_sparse_min():
    values = np.array([5, 3, 8, 1, 9, 2, 7])
    rmq = SparseMin(values)
    for lo in range(len(values)):
        for hi in range(lo, len(values)):
            assert rmq.query(lo, hi) == values[lo : hi + 1].min()
