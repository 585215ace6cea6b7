"""Numeric bounds relating repetitiveness measures, checked on a text.

Every row compares an integer measurement with a real-valued bound in the
length ``N``, the LZ77 factor count ``z``, the power-freeness parameter ``q``
and the alphabet size.  Bounds are evaluated in floating point; when the
measurement is within ``1e-9`` (relative) of the bound the row is
re-evaluated with 50-digit decimals before deciding.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import oracles
from .bwt import bwt
from .correspondence import check_injectivity, check_nonextendability, run_boundary_pairs
from .errors import ParameterError, RepMeasureError
from .lz77 import lz77
from .periodicity import fourth_power_runs, max_exponent_witness, root_class
from .repeats import enumerate_maximal_pairs, summarize_repeats
from .scan import scan_index_pairs
from .suffix import SuffixIndex
from .taxonomy import (
    APERIODIC_LONG_PART,
    BELOW_2Q_POWER,
    CUBIC_LONG_PART,
    ONE_SIDE_UNEXTENDABLE,
    classify,
    pairs_from_extension_pair,
)
from .text import EXPONENT_CAP, Cap, Text, as_text, require_length

MARGIN = 1e-9
CROSS_CHECK_LIMIT = 64


@dataclass(frozen=True)
class RowSpec:
    name: str
    formula: str
    anchor: str
    measure: str
    value: Callable
    uses_q: bool = False


def _rows() -> Tuple[RowSpec, ...]:
    return (
        RowSpec("B1", "73*log2(N)*(z+2)^2", "BWT runs versus LZ77 factors", "r",
                lambda e: 73 * e["lg"] * (e["z"] + 2) ** 2),
        RowSpec("B2", "18*q*(1+log_q(N))*(z+2)^2", "CDAWG arcs in a q-power-free text", "cdawg_arc_total",
                lambda e: 18 * e["q"] * (1 + e["lq"]) * (e["z"] + 2) ** 2, True),
        RowSpec("B3", "18*q*(1+log_q(N))*(z+2)^2 - (z+1)", "right extensions in a q-power-free text",
                "right_extension_total",
                lambda e: 18 * e["q"] * (1 + e["lq"]) * (e["z"] + 2) ** 2 - (e["z"] + 1), True),
        RowSpec("B4", "41*log2(N)*(z+1)*(z+2)", "pair classes whose body is below a sixth power",
                "pairs_not_sixth_power",
                lambda e: 41 * e["lg"] * (e["z"] + 1) * (e["z"] + 2)),
        RowSpec("B5", "32*(z+1)^2*log2(N)", "one-side unextendable fourth-power pair classes",
                "pairs_fourth_power_nonextendable",
                lambda e: 32 * (e["z"] + 1) ** 2 * e["lg"]),
        RowSpec("B6", "18*q*(1+log_q(N))", "per (i, j): classes whose longer part is below q",
                "max_per_index_pair_aperiodic_long_part",
                lambda e: 18 * e["q"] * (1 + e["lq"]), True),
        RowSpec("B7", "12*log2(N)", "per (i, j): classes with an unextended cubic longer part",
                "max_per_index_pair_cubic_long_part",
                lambda e: 12 * e["lg"]),
        RowSpec("B8", "12*(1+3*q/log2(q))*log2(N)", "per (i, j): classes whose body is below a 2q-th power",
                "max_per_index_pair_below_2q_power",
                lambda e: 12 * (1 + 3 * e["q"] / e["lgq"]) * e["lg"], True),
        RowSpec("B9", "4*floor(log2(N))", "per i: distinct fourth-power extensions crossing i",
                "max_crossing_extensions_over_i",
                lambda e: 4 * e["flg"]),
        RowSpec("B10", "4", "pair classes per pair of compatible extensions",
                "max_pairs_per_extension_pair",
                lambda e: 4),
        RowSpec("B11", "8*(z+1)^2*log2(N)", "distinct pairs of compatible extensions",
                "compatible_extension_pairs",
                lambda e: 8 * (e["z"] + 1) ** 2 * e["lg"]),
        RowSpec("B12", "|alphabet|", "BWT boundaries without a pair (L = 0)", "boundary_L0_count",
                lambda e: e["sigma"]),
    )


ROWS = _rows()


def _environment(N: int, z: int, q: int, sigma: int, precise: bool) -> dict:
    env = {"N": N, "z": z, "q": q, "sigma": sigma, "flg": N.bit_length() - 1}
    if precise:
        ln2 = Decimal(2).ln()
        env["lg"] = Decimal(N).ln() / ln2
        env["lq"] = Decimal(N).ln() / Decimal(q).ln()
        env["lgq"] = Decimal(q).ln() / ln2
    else:
        env["lg"] = math.log2(N)
        env["lq"] = math.log(N) / math.log(q)
        env["lgq"] = math.log2(q)
    return env


@dataclass(frozen=True)
class BoundRow:
    name: str
    formula: str
    anchor: str
    bound: Optional[float]
    measured: Optional[int]
    holds: Optional[bool]  # None when skipped
    precise: bool = False
    note: str = ""

    @property
    def ratio(self) -> Optional[float]:
        if self.holds is None or not self.bound:
            return None
        return self.measured / self.bound


def evaluate_row(spec: RowSpec, measured: int, N: int, z: int, q: int, sigma: int) -> BoundRow:
    value = spec.value(_environment(N, z, q, sigma, precise=False))
    if abs(value - measured) > MARGIN * max(1.0, abs(value)):
        return BoundRow(spec.name, spec.formula, spec.anchor, float(value), measured, measured <= value)
    with localcontext() as c:
        c.prec = 50
        exact = spec.value(_environment(N, z, q, sigma, precise=True))
        return BoundRow(spec.name, spec.formula, spec.anchor, float(exact), measured,
                        bool(measured <= exact), precise=True)


@dataclass
class BoundReport:
    text_id: str
    length: int
    alphabet_size: int
    z: int
    r: int
    q_user: Optional[int]
    q: int
    q_min: int
    max_exponent: Fraction
    measured: Dict[str, int]
    bounds: List[BoundRow]
    witnesses: Dict[str, object] = field(default_factory=dict)
    notices: List[str] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)
    exhaustive: bool = True

    @property
    def holds(self) -> bool:
        return all(row.holds is not False for row in self.bounds)

    @property
    def violations(self) -> List[BoundRow]:
        return [row for row in self.bounds if row.holds is False]

    def row(self, name: str) -> BoundRow:
        return next(r for r in self.bounds if r.name == name)

    def to_dict(self) -> dict:
        out = {
            "text_id": self.text_id,
            "length": self.length,
            "alphabet_size": self.alphabet_size,
            "z": self.z,
            "r": self.r,
            "q_user": self.q_user,
            "q": self.q,
            "q_min": self.q_min,
            "max_exponent": str(self.max_exponent),
            "measures": dict(self.measured),
            "bounds": [
                {
                    "name": row.name,
                    "formula": row.formula,
                    "bound": row.bound,
                    "measured": row.measured,
                    "holds": row.holds,
                    "anchors": row.anchor,
                    "precise": row.precise,
                    "note": row.note,
                }
                for row in self.bounds
            ],
            "witnesses": {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()},
            "notices": list(self.notices),
            "mismatches": list(self.mismatches),
            "exhaustive": self.exhaustive,
            "holds": self.holds,
        }
        return out


# -- fourth-power measurements ------------------------------------------------


def max_crossing_extensions(t: Text, runs) -> Tuple[int, int]:
    """Max over ``i`` in ``1..N+1`` of the number of distinct content keys of
    runs with ``l-1 < i <= r+1``, and an ``i`` attaining it."""
    N = len(t)
    spans = defaultdict(list)
    for e in runs:
        spans[e.content_key].append((e.core[0], e.core[1] + 1))
    diff = np.zeros(N + 3, dtype=np.int64)
    for intervals in spans.values():
        intervals.sort()
        merged = []
        for lo, hi in intervals:
            if merged and lo <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        for lo, hi in merged:
            diff[lo] += 1
            diff[hi + 1] -= 1
    counts = np.cumsum(diff)[1 : N + 2]
    if not len(counts) or counts.max() == 0:
        return 0, 1
    k = int(np.argmax(counts))
    return int(counts[k]), k + 1


@dataclass(frozen=True)
class FourthPowerSummary:
    runs: int
    classes: int  # one-side unextendable fourth-power pair classes
    max_per_extension_pair: int
    compatible_pairs: int  # unordered content-key pairs, a key with itself included
    max_crossing: int
    crossing_index: int
    keys: frozenset


def fourth_power_summary(t) -> FourthPowerSummary:
    t = as_text(t)
    runs = fourth_power_runs(t)
    groups = defaultdict(list)
    for e in runs:
        groups[root_class(t, e)].append(e)
    # outcomes depend only on the two padded contents (and whether the runs coincide)
    cache = {}
    for members in groups.values():
        for x in range(len(members)):
            for y in range(x, len(members)):
                e1, e2 = members[x], members[y]
                key = (e1.content_key, e2.content_key, x == y)
                if key not in cache:
                    cache[key] = frozenset(p.copy_key for p in pairs_from_extension_pair(t, e1, e2))
    classes = frozenset().union(*cache.values()) if cache else frozenset()
    compatible = 0
    for members in groups.values():
        k = len({e.content_key for e in members})
        compatible += k * (k + 1) // 2
    crossing, at = max_crossing_extensions(t, runs)
    return FourthPowerSummary(
        len(runs),
        len(classes),
        max((len(v) for v in cache.values()), default=0),
        compatible,
        crossing,
        at,
        classes,
    )


# -- verify -------------------------------------------------------------------


def _resolve_q(t: Text, q: Optional[int], allow_powers: bool, cap: Optional[Cap]):
    e, lo, hi = max_exponent_witness(t, cap)
    q_min = max(2, e.numerator // e.denominator + 1)
    notices = []
    skip_q_rows = False
    if q is None:
        return e, q_min, q_min, notices, skip_q_rows
    if q < 2:
        raise ParameterError("q must be at least 2")
    if e >= q:
        witness = t.substring(lo, hi)
        message = (
            f"text is not {q}-power-free: S[{lo}..{hi}] = {witness.decode('latin-1')!r} "
            f"has exponent {e}"
        )
        if not allow_powers:
            raise ParameterError(message)
        notices.append(message + "; rows using q are skipped")
        skip_q_rows = True
    return e, q_min, q, notices, skip_q_rows


def _cross_check(t: Text, z: int, r: int, summary, fourth: FourthPowerSummary) -> List[str]:
    """Compare the fast measurements with brute-force routes."""
    out = []
    oz = len(oracles.lz77(t))
    if oz != z:
        out.append(f"z: {z} vs brute force {oz}")
    orr = oracles.run_count(oracles.bwt(t))
    if orr != r:
        out.append(f"r: {r} vs brute force {orr}")
    triples = oracles.maximal_pairs(t)
    keys = {oracles.copy_key(t, *x) for x in triples}
    if len(keys) != summary.pair_classes:
        out.append(f"pair classes: {summary.pair_classes} vs brute force {len(keys)}")
    pairs = enumerate_maximal_pairs(t, cap=None)
    tagged = set()
    for p in pairs:
        if classify(t, p, p.n, p.m, 2).has(ONE_SIDE_UNEXTENDABLE):
            tagged.add(p.copy_key)
    if tagged != set(fourth.keys):
        out.append(f"fourth-power classes: {len(fourth.keys)} vs reference {len(tagged)}")
    return out


def verify(
    t,
    q: Optional[int] = None,
    allow_powers: bool = False,
    text_id: Optional[str] = None,
    sample: Optional[int] = None,
    seed: int = 0,
    cross_check: Optional[bool] = None,
    cap: Optional[Cap] = EXPONENT_CAP,
) -> BoundReport:
    """Measure everything and evaluate rows B1 to B12.

    ``sample`` restricts the split indices of the per-(i, j) rows to a seeded
    random subset of that size (the report is then marked non-exhaustive).
    ``cross_check`` (default: on for texts up to 64 symbols) recomputes the
    main counts by brute force and records any disagreement."""
    t = as_text(t)
    require_length(t, 2, "verify")
    if cap is not None:
        cap.check(t, "verify")
    N = len(t)
    max_exp, q_min, q_eff, notices, skip_q_rows = _resolve_q(t, q, allow_powers, cap)

    parse = lz77(t)
    z = parse.z
    index = SuffixIndex(t.data)
    r = bwt(t).r
    summary = summarize_repeats(t, index)
    split = None
    if sample is not None and sample < len(parse.starts):
        rng = np.random.Generator(np.random.PCG64(seed))
        split = sorted(rng.choice(parse.starts, size=sample, replace=False).tolist())
        notices.append(f"per-(i, j) rows sampled {sample} of {len(parse.starts)} split indices (seed {seed})")
    scan = scan_index_pairs(t, q_eff, parse, split_indices=split, index=index)
    fourth = fourth_power_summary(t)
    boundaries = run_boundary_pairs(t, index)
    injectivity = check_injectivity(t, boundaries)
    unextendable_failures = [
        (b.boundary_index, d)
        for b in boundaries
        if b.pair is not None
        for d in check_nonextendability(t, b).failures
    ]

    measured = {
        "substantially_different_pairs": summary.pair_classes,
        "pairs_not_sixth_power": summary.pair_classes_below_sixth_power,
        "pairs_fourth_power_nonextendable": fourth.classes,
        "maximal_repeats": summary.cdawg.maximal_repeat_count,
        "right_extension_total": summary.cdawg.right_extension_total,
        "cdawg_arc_total": summary.cdawg.arc_total,
        "max_crossing_extensions_over_i": fourth.max_crossing,
        "boundary_L0_count": injectivity.l0_count,
        "boundary_count": injectivity.boundaries,
        "nonextendability_violations": len(unextendable_failures),
        "max_per_index_pair_aperiodic_long_part": scan.maxima[APERIODIC_LONG_PART],
        "max_per_index_pair_cubic_long_part": scan.maxima[CUBIC_LONG_PART],
        "max_per_index_pair_below_2q_power": scan.maxima[BELOW_2Q_POWER],
        "max_pairs_per_extension_pair": fourth.max_per_extension_pair,
        "compatible_extension_pairs": fourth.compatible_pairs,
        "r": r,
    }
    witnesses = {
        "crossing_index": fourth.crossing_index,
        **{f"index_pair_{label}": ij for label, ij in scan.argmax.items()},
    }
    if unextendable_failures:
        witnesses["nonextendability_failures"] = unextendable_failures[:20]
    mismatches = []
    if not injectivity.injective:
        mismatches.append("run-boundary map is not injective")
    if not injectivity.run_identity:
        mismatches.append(f"boundaries + 1 = {injectivity.boundaries + 1} but r = {r}")
    if injectivity.needs_sentinel_slack:
        notices.append("L = 0 boundaries exceed the alphabet size by one")
    if cross_check is None:
        cross_check = N <= CROSS_CHECK_LIMIT
    if cross_check:
        mismatches += _cross_check(t, z, r, summary, fourth)

    sigma = len(t.alphabet)
    rows = []
    for spec in ROWS:
        if spec.uses_q and skip_q_rows:
            rows.append(BoundRow(spec.name, spec.formula, spec.anchor, None, measured[spec.measure], None,
                                 note=f"skipped: text is not {q_eff}-power-free"))
            continue
        row = evaluate_row(spec, measured[spec.measure], N, z, q_eff, sigma)
        notes = []
        if spec.name in ("B6", "B7", "B8") and not scan.exhaustive:
            notes.append("sampled split indices")
        if spec.name == "B8" and q_eff % 2:
            notes.append("evaluated at odd q")
        if notes:
            row = BoundRow(**{**asdict(row), "note": "; ".join(notes)})
        rows.append(row)
    if unextendable_failures:
        notices.append(f"{len(unextendable_failures)} boundary periods gained more than one period length")
    return BoundReport(
        text_id=text_id or f"text-{N}",
        length=N,
        alphabet_size=sigma,
        z=z,
        r=r,
        q_user=q,
        q=q_eff,
        q_min=q_min,
        max_exponent=max_exp,
        measured=measured,
        bounds=rows,
        witnesses=witnesses,
        notices=notices,
        mismatches=mismatches,
        exhaustive=scan.exhaustive,
    )


@dataclass
class CorpusReport:
    reports: List[BoundReport]
    failures: Dict[str, str]
    max_ratio: Dict[str, float]
    argmax_ratio: Dict[str, str]

    @property
    def holds(self) -> bool:
        return not self.failures and all(r.holds and not r.mismatches for r in self.reports)

    @property
    def violations(self) -> List[Tuple[str, str]]:
        return [(rep.text_id, row.name) for rep in self.reports for row in rep.violations]


def verify_corpus(texts: Sequence, **kwargs) -> CorpusReport:
    """Run :func:`verify` on each text (``Text``, bytes or ``(text_id, text)``).

    Errors are recorded per text and never stop the batch.  Reports are sorted
    by text id and carry the largest measured/bound ratio seen per row."""
    reports, failures = [], {}
    for k, item in enumerate(texts):
        text_id, t = item if isinstance(item, tuple) else (f"text-{k}", item)
        try:
            reports.append(verify(t, text_id=text_id, **kwargs))
        except (RepMeasureError, ValueError) as exc:
            failures[text_id] = f"{type(exc).__name__}: {exc}"
    reports.sort(key=lambda r: r.text_id)
    max_ratio, where = {}, {}
    for rep in reports:
        for row in rep.bounds:
            ratio = row.ratio
            if ratio is not None and ratio > max_ratio.get(row.name, -1.0):
                max_ratio[row.name] = ratio
                where[row.name] = rep.text_id
    return CorpusReport(reports, failures, max_ratio, where)
