import pytest
from hypothesis import given, strategies as st

from repmeasure.errors import RangeError, SizeError
from repmeasure.text import EXHAUSTIVE_CAP, Cap, Text, char_at, lce, read_text, render, require_length, substring

from conftest import words


def test_sentinel_positions():
    t = Text("ab")
    assert char_at(t, 0) == 0
    assert char_at(t, 3) == 0
    assert char_at(t, 1) == ord("a")
    with pytest.raises(RangeError):
        char_at(t, 4)
    with pytest.raises(RangeError):
        char_at(t, -1)


def test_substring_is_inclusive_and_padded():
    t = Text("abc")
    assert substring(t, 1, 3) == b"abc"
    assert substring(t, 0, 1) == b"\x00a"
    assert substring(t, 3, 4) == b"c\x00"
    assert substring(t, 2, 1) == b""
    with pytest.raises(RangeError):
        substring(t, 1, 5)


def test_rejects_sentinel_byte():
    with pytest.raises(ValueError):
        Text(b"a\x00b")


def test_text_accepts_str_bytes_and_text():
    assert Text("aé").data == "aé".encode()
    assert Text(Text(b"xy")) == Text("xy")
    assert hash(Text("ab")) == hash(Text(b"ab"))
    assert Text("abca").alphabet == frozenset(b"abc")


def test_lce_examples():
    t = Text("abab")
    assert lce(t, 1, 3) == 2
    assert lce(t, 1, 2) == 0
    assert lce(t, 2, 2) == 3
    with pytest.raises(RangeError):
        lce(t, 0, 1)


@given(words(max_size=16), st.data())
def test_lce_matches_definition(s, data):
    t = Text(s)
    n = data.draw(st.integers(1, len(s)))
    m = data.draw(st.integers(1, len(s)))
    k = lce(t, n, m)
    assert s[n - 1 : n - 1 + k] == s[m - 1 : m - 1 + k]
    if n != m:
        # the next symbols differ, or one side ran into the end
        assert n - 1 + k == len(s) or m - 1 + k == len(s) or s[n - 1 + k] != s[m - 1 + k]


def test_render_and_caps(tmp_path):
    assert render(b"\x00ab\x00") == "$ab$"
    require_length(Text("ab"), 2)
    with pytest.raises(SizeError):
        require_length(Text("a"), 2, "verify")
    with pytest.raises(SizeError, match="--cap"):
        Cap(3, "--cap").check(Text("abcd"), "enumerate")
    assert EXHAUSTIVE_CAP.limit == 4096
    f = tmp_path / "in.txt"
    f.write_bytes(b"abc\n")
    assert read_text(str(f)).data == b"abc\n"
    assert read_text(str(f), strip_newline=True).data == b"abc"
