from repmeasure.selftest import MISMATCH, NOTE, VIOLATION, SuiteResult, exit_code, suites


def test_line_format():
    assert SuiteResult("x", MISMATCH, 4, 0).line() == "PASS x: 4 checked, 0 mismatch(s)"
    bad = SuiteResult("x", VIOLATION, 4, 1, b"ab")
    assert bad.line().startswith("FAIL x:") and "b'ab'" in bad.line()
    assert SuiteResult("x", NOTE, 4, 2).line().startswith("INFO")


def test_exit_code_priority():
    ok = SuiteResult("a", MISMATCH, 1, 0)
    note = SuiteResult("b", NOTE, 1, 1)
    violation = SuiteResult("c", VIOLATION, 1, 1)
    mismatch = SuiteResult("d", MISMATCH, 1, 1)
    assert exit_code([ok, note]) == 0
    assert exit_code([ok, violation]) == 1
    assert exit_code([violation, mismatch]) == 3


def test_quick_suites_cover_every_check():
    results = suites(quick=True)
    names = [r.name for r in results]
    assert len(names) == len(set(names)) == 10
    assert all(r.checked > 0 for r in results)
    assert exit_code(results) == 0


def test_injected_fault_is_reported():
    results = suites(quick=True, inject="lz77-ternary")
    bad = [r for r in results if not r.ok]
    assert [r.name for r in bad] == ["lz77-ternary"] and bad[0].failures == 1
