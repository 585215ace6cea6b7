"""Exhaustive oracle suites and property sweeps behind ``repmeasure selftest``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional

from . import oracles
from .bwt import bwt, cyclic_bwt
from .correspondence import sweep
from .corpus import fibonacci_number, fibonacci_word
from .lz77 import lz77
from .periodicity import three_squares_counterexamples, two_cubes_counterexamples
from .repeats import pair_arrays

MISMATCH = "mismatch"
VIOLATION = "violation"
NOTE = "note"  # reported but never affects the exit code


@dataclass
class SuiteResult:
    name: str
    kind: str  # what a failure means: an oracle mismatch or a property violation
    checked: int
    failures: int
    example: Optional[bytes] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.ok else ("INFO" if self.kind == NOTE else "FAIL")
        extra = f" first failing input {self.example!r}" if self.example is not None else ""
        return f"{status} {self.name}: {self.checked} checked, {self.failures} {self.kind}(s){extra}"


def _run(name: str, kind: str, inputs: Iterable[bytes], good: Callable[[bytes], bool], fault: bool) -> SuiteResult:
    result = SuiteResult(name, kind, 0, 0)
    for s in inputs:
        result.checked += 1
        ok = good(s)
        if fault and result.checked == 1:
            ok = not ok
        if not ok:
            result.failures += 1
            if result.example is None:
                result.example = s
    return result


def _pairs_agree(s: bytes) -> bool:
    n, m, l = pair_arrays(s)
    return set(zip(n.tolist(), m.tolist(), l.tolist())) == oracles.maximal_pairs(s)


def _lz_agrees(s: bytes) -> bool:
    return lz77(s).contents(s) == oracles.lz77(s)


def _boundary_map_holds(s: bytes) -> bool:
    res = sweep(s)
    return not res.violations and res.injective and res.l0_count <= len(set(s))


def suites(quick: bool = False, inject: Optional[str] = None) -> List[SuiteResult]:
    """Run every suite.  ``quick`` shortens the lengths; ``inject`` names a
    suite whose first verdict is flipped (negative control for tests)."""
    binary = 8 if quick else 12
    ternary = 6 if quick else 9
    property_binary = 10 if quick else 16
    sweep_ternary = 7 if quick else 12
    out = [
        _run("bwt-binary", MISMATCH, oracles.strings(b"ab", binary),
             lambda s: bwt(s).bwt == oracles.bwt(s), inject == "bwt-binary"),
        _run("lz77-binary", MISMATCH, oracles.strings(b"ab", binary), _lz_agrees, inject == "lz77-binary"),
        _run("lz77-ternary", MISMATCH, oracles.strings(b"abc", ternary), _lz_agrees, inject == "lz77-ternary"),
        _run("pairs-binary", MISMATCH, oracles.strings(b"ab", binary), _pairs_agree, inject == "pairs-binary"),
        _run("pairs-ternary", MISMATCH, oracles.strings(b"abc", ternary), _pairs_agree, inject == "pairs-ternary"),
        _run("fibonacci-cyclic-bwt", VIOLATION, (fibonacci_word(n) for n in range(5, 16)),
             _fibonacci_shape, inject == "fibonacci-cyclic-bwt"),
        _run("two-cubes", VIOLATION, oracles.strings(b"ab", property_binary),
             lambda s: not two_cubes_counterexamples(s), inject == "two-cubes"),
        _run("three-squares", VIOLATION, oracles.strings(b"ab", property_binary),
             lambda s: not three_squares_counterexamples(s, strict=False), inject == "three-squares"),
        # equality |w| = |u| + |v| does occur, so the strict form is informational
        _run("three-squares-strict", NOTE, oracles.strings(b"ab", property_binary),
             lambda s: not three_squares_counterexamples(s), inject == "three-squares-strict"),
        _run("boundary-map-ternary", VIOLATION, oracles.strings(b"abc", sweep_ternary),
             _boundary_map_holds, inject == "boundary-map-ternary"),
    ]
    return out


def _fibonacci_shape(s: bytes) -> bool:
    n = next(k for k in range(1, 40) if fibonacci_number(k) == len(s) and fibonacci_word(k) == s)
    return cyclic_bwt(s).bwt == b"b" * fibonacci_number(n - 2) + b"a" * fibonacci_number(n - 1)


def exit_code(results: List[SuiteResult]) -> int:
    if any(not r.ok and r.kind == MISMATCH for r in results):
        return 3
    if any(not r.ok and r.kind == VIOLATION for r in results):
        return 1
    return 0
