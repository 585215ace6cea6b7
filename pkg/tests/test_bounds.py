import json

import pytest

from repmeasure.bounds import (
    ROWS,
    evaluate_row,
    fourth_power_summary,
    max_crossing_extensions,
    verify,
    verify_corpus,
)
from repmeasure.corpus import EXAMPLE
from repmeasure.errors import ParameterError, SizeError
from repmeasure.periodicity import fourth_power_runs
from repmeasure.taxonomy import crossing_extensions
from repmeasure.text import Text

ROW = {spec.name: spec for spec in ROWS}


def test_row_values():
    assert evaluate_row(ROW["B1"], 0, N=2, z=1, q=2, sigma=1).bound == 657
    assert evaluate_row(ROW["B9"], 0, N=31, z=1, q=2, sigma=1).bound == 16
    assert evaluate_row(ROW["B12"], 3, N=5, z=3, q=2, sigma=2).holds is False
    assert [spec.name for spec in ROWS] == [f"B{k}" for k in range(1, 13)]


def test_precise_fallback_at_equality():
    row = evaluate_row(ROW["B1"], 657, N=2, z=1, q=2, sigma=1)
    assert row.precise and row.holds
    assert not evaluate_row(ROW["B1"], 658, N=2, z=1, q=2, sigma=1).holds
    assert not evaluate_row(ROW["B1"], 1, N=2, z=1, q=2, sigma=1).precise


def test_aaa():
    rep = verify("aaa")
    assert rep.q == rep.q_min == 4 and rep.max_exponent == 3
    assert rep.measured["cdawg_arc_total"] == 6
    assert rep.measured["substantially_different_pairs"] == 2
    assert rep.measured["r"] == 2 and rep.measured["boundary_count"] == 1
    assert rep.holds and not rep.mismatches


def test_ab():
    rep = verify("ab")
    assert rep.q == 2 and rep.measured["boundary_L0_count"] == 2
    assert rep.row("B12").bound == 2 and rep.row("B12").holds
    assert rep.holds


def test_non_power_free_q():
    with pytest.raises(ParameterError, match="aaa"):
        verify("baaab", q=3)
    rep = verify("baaab", q=3, allow_powers=True)
    skipped = {row.name for row in rep.bounds if row.holds is None}
    assert skipped == {"B2", "B3", "B6", "B8"}
    assert rep.notices and rep.holds
    with pytest.raises(ParameterError):
        verify("ab", q=1)


def test_odd_q_note():
    rep = verify("abab", q=3)
    assert rep.row("B8").note == "evaluated at odd q"
    assert rep.row("B6").note == ""


def test_too_short():
    with pytest.raises(SizeError):
        verify("a")


def test_example():
    rep = verify(EXAMPLE, text_id="worked-example")
    assert rep.z == 5 and rep.holds and not rep.mismatches
    # (2, 3, 9) and (2, 24, 9) are copies: both read b a^9 a / a a^9 b
    assert rep.measured["pairs_fourth_power_nonextendable"] == 3
    assert rep.measured["compatible_extension_pairs"] == 3
    d = rep.to_dict()
    assert json.loads(json.dumps(d))["bounds"][0]["name"] == "B1"


def test_known_b10_excess():
    rep = verify("baaaaabcaaaaaaac")
    assert rep.row("B10").measured == 5 and rep.row("B10").holds is False
    assert [row.name for row in rep.violations] == ["B10"]
    assert not rep.mismatches


def test_sampling():
    t = Text(EXAMPLE * 3)
    rep = verify(t, sample=2, seed=1)
    assert not rep.exhaustive
    assert rep.row("B7").note == "sampled split indices"


def test_crossing_max_matches_direct():
    for s in ["baaaab", EXAMPLE, "aaaabaaaabaaaa", "abababababcabab"]:
        t = Text(s)
        runs = fourth_power_runs(t)
        best, at = max_crossing_extensions(t, runs)
        direct = [len(crossing_extensions(t, i, runs)) for i in range(1, len(t) + 2)]
        assert best == max(direct) and direct[at - 1] == best
        assert fourth_power_summary(t).max_crossing == best


def test_verify_corpus_isolates_failures():
    rep = verify_corpus([("ok", Text("abab")), ("short", Text("a")), ("bad-q", Text("aaaa"))], q=3)
    assert [r.text_id for r in rep.reports] == ["ok"]
    assert set(rep.failures) == {"short", "bad-q"}
    assert not rep.holds
    empty = verify_corpus([])
    assert empty.reports == [] and empty.holds


def test_verify_corpus_ratios():
    rep = verify_corpus([("x", "abaab"), ("y", "aaaaa")])
    assert rep.holds
    assert set(rep.max_ratio) == {spec.name for spec in ROWS}
    assert rep.argmax_ratio["B1"] in {"x", "y"}
