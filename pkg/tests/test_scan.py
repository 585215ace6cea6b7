import numpy as np
from hypothesis import given, strategies as st

from repmeasure import oracles
from repmeasure.lz77 import lz77
from repmeasure.repeats import enumerate_maximal_pairs
from repmeasure.scan import SCANNED_LABELS, scan_index_pairs
from repmeasure.taxonomy import count_per_index_pair
from repmeasure.text import Text

from conftest import words


def reference(t, q, universe):
    pairs = enumerate_maximal_pairs(t)
    best = {}
    for label in SCANNED_LABELS:
        best[label] = max(
            (count_per_index_pair(t, pairs, i, j, label, q) for i in universe for j in universe),
            default=0,
        )
    return best


@given(words(max_size=18), st.integers(2, 5))
def test_matches_direct_counting_on_lz_starts(s, q):
    t = Text(s)
    starts = lz77(t).starts
    assert scan_index_pairs(t, q).maxima == reference(t, q, starts)


@given(words("ab", max_size=14), st.integers(2, 4))
def test_matches_direct_counting_on_all_positions(s, q):
    t = Text(s)
    universe = range(1, len(s) + 2)
    assert scan_index_pairs(t, q, universe=universe).maxima == reference(t, q, universe)


def test_exhaustive_binary():
    for s in oracles.strings(b"ab", 9):
        t = Text(s)
        assert scan_index_pairs(t, 3).maxima == reference(t, 3, lz77(t).starts), s


def test_sampling_marks_report():
    t = Text("abaababaabaab")
    full = scan_index_pairs(t, 3)
    part = scan_index_pairs(t, 3, split_indices=lz77(t).starts[:2])
    assert full.exhaustive and not part.exhaustive and part.split_indices == 2
    for label in SCANNED_LABELS:
        assert part.maxima[label] <= full.maxima[label]


def test_argmax_reaches_maximum():
    t = Text("b" + "a" * 10 + "b" + "a" * 20 + "b")
    res = scan_index_pairs(t, 3)
    pairs = enumerate_maximal_pairs(t)
    for label, (i, j) in res.argmax.items():
        assert count_per_index_pair(t, pairs, i, j, label, 3) == res.maxima[label]
    assert all(isinstance(v, int) and not isinstance(v, np.integer) for v in res.maxima.values())
