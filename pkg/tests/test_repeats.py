import pytest
from hypothesis import given

from repmeasure import oracles
from repmeasure.errors import SizeError
from repmeasure.lz77 import lz77
from repmeasure.periodicity import q_free_witness
from repmeasure.repeats import (
    cdawg_stats,
    copy_classes,
    enumerate_maximal_pairs,
    enumerate_maximal_repeats,
    make_pair,
    node_pair_classes,
    summarize_repeats,
)
from repmeasure.text import Cap, Text

from conftest import words


def triples(s):
    return [p.triple for p in enumerate_maximal_pairs(s)]


def test_pair_examples():
    assert triples("aa") == [(1, 2, 1)]
    assert triples("abab") == [(1, 3, 2)]
    assert triples("aaa") == [(1, 2, 2), (1, 3, 1)]
    assert triples("abcabc") == [(1, 4, 3)]
    assert triples("ab") == []


def test_class_examples():
    assert len(copy_classes(enumerate_maximal_pairs("aaa"))) == 2
    assert len(copy_classes(enumerate_maximal_pairs("abcabc"))) == 1
    t = Text("abab")
    p = make_pair(t, 1, 3, 2)
    q = make_pair(t, 3, 1, 2)
    assert p.copy_key == q.copy_key
    assert p.swapped().triple == (3, 1, 2) and p.swapped().canonical() == p


def test_repeat_examples():
    reps = {r.content: r for r in enumerate_maximal_repeats("aaa")}
    assert set(reps) == {b"a", b"aa"}
    assert reps[b"a"].occurrence_count == 3 and reps[b"aa"].occurrence_count == 2
    assert [r.content for r in enumerate_maximal_repeats("abab")] == [b"ab"]
    assert enumerate_maximal_repeats("ab") == []


def test_cdawg_examples():
    s = cdawg_stats("aaa")
    assert (s.maximal_repeat_count, s.right_extension_total, s.root_arcs, s.arc_total) == (2, 4, 2, 6)
    s = cdawg_stats("ab")
    assert (s.right_extension_total, s.root_arcs, s.arc_total) == (0, 3, 3)
    assert cdawg_stats("abab").arc_total == 5


def test_caps():
    with pytest.raises(SizeError, match="--cap"):
        enumerate_maximal_pairs("a" * 20, Cap(16, "--cap"))
    with pytest.raises(SizeError):
        enumerate_maximal_repeats("a" * 20, Cap(16, "--cap"))


def test_exhaustive_against_oracles():
    for s in oracles.strings(b"abc", 7):
        pairs = enumerate_maximal_pairs(s)
        assert {p.triple for p in pairs} == oracles.maximal_pairs(s)
        classes = copy_classes(pairs)
        assert summarize_repeats(s).pair_classes == len(classes)
        reps = enumerate_maximal_repeats(s)
        expected = oracles.maximal_repeats(s)
        assert {r.content for r in reps} == set(expected)
        for r in reps:
            count, left, right = expected[r.content]
            assert r.occurrence_count == count
            assert r.left_extensions == left and r.right_extensions == right
            assert len(r.left_extensions) >= 2 and len(r.right_extensions) >= 2


@given(words(max_size=40))
def test_pair_invariants(s):
    t = Text(s)
    p = t.padded
    for pair in enumerate_maximal_pairs(t):
        n, m, l = pair.triple
        assert n < m
        assert p[n : n + l] == p[m : m + l]
        assert p[n - 1] != p[m - 1] and p[n + l] != p[m + l]


@given(words(max_size=30))
def test_pairs_and_repeats_correspond(s):
    bodies = {s[p.n - 1 : p.n - 1 + p.l] for p in enumerate_maximal_pairs(s)}
    assert bodies == {r.content for r in enumerate_maximal_repeats(s)}


def test_identical_bodies_can_differ_in_class():
    # "abacaba": pairs on body "a" with different contexts
    found = None
    for s in oracles.strings(b"abc", 7):
        by_body = {}
        for key in copy_classes(enumerate_maximal_pairs(s)):
            by_body.setdefault(key[0][1:-1], set()).add(key)
        if any(len(v) >= 2 for v in by_body.values()):
            found = s
            break
    assert found is not None


def test_closed_form_class_count():
    # three children with left masks {a}, {a, b}, {b}: 1*2-1 + 1*1-0 + 2*1-1
    from repmeasure.repeats import Node

    node = Node(1, 0, 3, ((0, 0b01), (1, 0b11), (3, 0b10)))
    assert node_pair_classes(node) == 3


def test_class_count_below_cubic_bound():
    for s in oracles.strings(b"abc", 7):
        z = lz77(s).z
        q = q_free_witness(s)
        assert summarize_repeats(s).pair_classes <= 3 * q * (z + 1) ** 3 - 2
