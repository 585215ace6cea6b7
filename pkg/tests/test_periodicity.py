from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from repmeasure import oracles
from repmeasure.corpus import thue_morse
from repmeasure.errors import InvalidOccurrenceError, RangeError
from repmeasure.periodicity import (
    exponent,
    fourth_power_runs,
    is_primitive,
    least_rotation,
    max_exponent,
    max_exponent_witness,
    maximal_periodic_extension,
    min_period,
    period_view,
    periods,
    power_witness,
    prefix_periods,
    primitive_square_prefixes,
    primitive_square_suffixes,
    q_free_witness,
    three_squares_counterexamples,
    two_cubes_counterexamples,
)
from repmeasure.text import Text

from conftest import words


@pytest.mark.parametrize("w, p", [(b"abab", 2), (b"aaa", 1), (b"abc", 3), (b"aabaa", 3)])
def test_min_period_examples(w, p):
    assert min_period(w) == p


def test_exponent_examples():
    assert exponent(b"abab") == 2
    assert exponent(b"aabaa") == Fraction(5, 3)
    assert exponent(b"a") == 1
    assert exponent(b"") == 0


def test_min_period_of_empty_word():
    with pytest.raises(ValueError):
        min_period(b"")


def test_border_identity_exhaustive():
    for w in oracles.strings(b"ab", 14):
        assert min_period(w) == oracles.min_period(w)


@given(words("ab", max_size=30))
def test_periods_and_prefix_periods(w):
    expected = [d for d in range(1, len(w) + 1) if all(w[k] == w[k + d] for k in range(len(w) - d))]
    assert periods(w) == expected
    per = prefix_periods(w)
    assert per[0] == 0
    assert per[1:] == [oracles.min_period(w[:k]) for k in range(1, len(w) + 1)]


@given(words("ab", max_size=20))
def test_primitivity(w):
    expected = not any(len(w) % d == 0 and w == w[:d] * (len(w) // d) for d in range(1, len(w)))
    assert is_primitive(w) == expected
    view = period_view(w)
    assert view.primitive == expected and view.exponent == exponent(w)


def test_max_exponent_examples():
    assert max_exponent("aaa") == 3
    assert q_free_witness("aaa") == 4
    tm = thue_morse(64)
    assert max_exponent(tm) == 2
    assert q_free_witness(tm) == 3
    assert max_exponent("ab") == 1
    assert q_free_witness("ab") == 2


@given(words(max_size=16))
def test_max_exponent_matches_brute_force(s):
    e, lo, hi = max_exponent_witness(s)
    assert e == oracles.max_exponent(s)
    assert exponent(s[lo - 1 : hi]) == e


def test_power_witness():
    assert power_witness("abaabaab", 3) is None
    assert exponent(power_witness("abaabaaba", 3)) >= 3


def test_extension_examples():
    e = maximal_periodic_extension("baaaab", 2, 3, 1)
    assert e.core == (2, 5) and e.padded == (1, 6) and e.content_key == b"baaaab"
    e = maximal_periodic_extension("abababc", 2, 5, 2)
    assert e.core == (1, 6) and e.padded == (0, 7)
    e = maximal_periodic_extension("aaa", 1, 3, 1)
    assert e.core == (1, 3) and e.padded == (0, 4)
    assert e.content_key == b"\x00aaa\x00"
    assert maximal_periodic_extension("abab", 1, 4).delta == 2


def test_extension_preconditions():
    with pytest.raises(InvalidOccurrenceError):
        maximal_periodic_extension("abc", 1, 3, 1)
    with pytest.raises(InvalidOccurrenceError):
        maximal_periodic_extension("abc", 0, 2, 1)
    with pytest.raises(InvalidOccurrenceError):
        maximal_periodic_extension("abc", 1, 2, 3)


@given(words("ab", max_size=18), st.data())
def test_extension_matches_oracle_and_is_idempotent(s, data):
    l = data.draw(st.integers(1, len(s)))
    r = data.draw(st.integers(l, len(s)))
    d = min_period(s[l - 1 : r])
    e = maximal_periodic_extension(s, l, r, d)
    lo, hi, key = oracles.extension(s, l, r, d)
    assert e.core == (lo, hi) and e.content_key == key
    assert e.core[0] <= l <= r <= e.core[1]
    assert 0 <= e.padded[0] and e.padded[1] <= len(s) + 1
    assert maximal_periodic_extension(s, *e.core, d) == e


def test_primitive_square_suffixes():
    assert primitive_square_suffixes("aabab", 6) == [4]
    assert primitive_square_suffixes("aaaa", 5) == [2]
    assert primitive_square_suffixes("abc", 4) == []
    with pytest.raises(RangeError):
        primitive_square_suffixes("abc", 1)


def test_primitive_square_prefixes():
    assert primitive_square_prefixes(b"abaababaab") == [3, 5]
    assert primitive_square_prefixes(b"aaaa") == [1]


@given(words("ab", max_size=20))
def test_fourth_power_runs_match_scan(s):
    runs = {(e.core, e.delta) for e in fourth_power_runs(s)}
    expected = set()
    for a in range(1, len(s) + 1):
        for b in range(a, len(s) + 1):
            w = s[a - 1 : b]
            d = oracles.min_period(w)
            if len(w) >= 4 * d:
                lo, hi, _ = oracles.extension(s, a, b, d)
                expected.add(((lo, hi), d))
    assert runs == expected


def test_least_rotation():
    assert least_rotation(b"baa") == b"aab"
    assert least_rotation(b"abab") == b"abab"
    for w in oracles.strings(b"abc", 6):
        assert least_rotation(w) == min(w[k:] + w[:k] for k in range(len(w)))


def _primitive(u):
    p = oracles.min_period(u)
    return p == len(u) or len(u) % p != 0


def _brute_three_squares(w, strict):
    bad = []
    for word in (w, w[::-1]):
        roots = [d for d in range(1, len(word) // 2 + 1) if word[:d] == word[d : 2 * d] and _primitive(word[:d])]
        for x in roots:
            for y in roots:
                for z in roots:
                    if x < y < z and (z < x + y or (strict and z == x + y)):
                        bad.append((x, y, z))
    return bad


def test_property_checkers_agree_with_brute_force():
    for w in oracles.strings(b"ab", 12):
        assert bool(three_squares_counterexamples(w)) == bool(_brute_three_squares(w, True))
        assert bool(three_squares_counterexamples(w, strict=False)) == bool(_brute_three_squares(w, False))
        cubes = []
        for word in (w, w[::-1]):
            cubes.append([k for k in range(1, len(word) + 1) if k >= 3 * oracles.min_period(word[:k])])
        expected = any(
            a <= b <= 2 * a and oracles.min_period(word[:a]) != oracles.min_period(word[:b])
            for word, cs in zip((w, w[::-1]), cubes) for a in cs for b in cs
        )
        assert bool(two_cubes_counterexamples(w)) == expected


def test_three_squares_equality_case():
    w = b"ababaabababaab"
    assert three_squares_counterexamples(w) == [("prefix", 2, 5, 7)]
    assert three_squares_counterexamples(w, strict=False) == []


def test_thue_morse_is_overlap_free_up_to_squares():
    for n in (10, 100, 500):
        assert max_exponent(thue_morse(n)) <= 2
    assert Text(thue_morse(8)).data == b"abbabaab"
