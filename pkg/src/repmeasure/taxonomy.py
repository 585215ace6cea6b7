"""Labels for maximal pairs relative to a split index ``i`` and a witness
index ``j``, plus the fourth-power extension machinery.

Label meanings (``left``/``right`` are ``S[n..i-1]`` and ``S[i..n+l-1]``; the
longer one wins, ties go to ``left``):

``APERIODIC-LONG-PART``
    the longer part has exponent ``< q`` (the empty word counts as 0).
``CUBIC-LONG-PART``
    the longer part has exponent ``>= 3`` and minimal period ``d``, and the
    body ``S[n..n+l-1]`` is not ``d``-periodic.
``BELOW-SIXTH-POWER`` / ``BELOW-2Q-POWER``
    the body has exponent ``< 6`` / ``< 2q``.
``FOURTH-POWER``
    the body has exponent ``>= 4``.
``ONE-SIDE-UNEXTENDABLE``
    a fourth-power body where at least one occurrence's maximal periodic
    extension adds at most one period length of symbols (left plus right).
``CROSSES-BOUNDARIES``
    some LZ77 factor start lies in ``[n, n+l]`` and some in ``[m, m+l]``.
``NEXT-START-OUTSIDE``
    both parts have exponent ``< q``, ``i`` is a factor start and the next
    factor start is outside ``[n, n+l]``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import ClassificationError, CompatibilityError, ParameterError
from .lz77 import Lz77Parse
from .periodicity import (
    PaddedExtension,
    exponent,
    extension_amounts,
    fourth_power_runs,
    maximal_periodic_extension,
    min_period,
    root_class,
)
from .repeats import MaximalPair, make_pair
from .text import Text, as_text, lce

APERIODIC_LONG_PART = "APERIODIC-LONG-PART"
CUBIC_LONG_PART = "CUBIC-LONG-PART"
BELOW_SIXTH_POWER = "BELOW-SIXTH-POWER"
BELOW_2Q_POWER = "BELOW-2Q-POWER"
FOURTH_POWER = "FOURTH-POWER"
ONE_SIDE_UNEXTENDABLE = "ONE-SIDE-UNEXTENDABLE"
CROSSES_BOUNDARIES = "CROSSES-BOUNDARIES"
NEXT_START_OUTSIDE = "NEXT-START-OUTSIDE"

LABELS = (
    APERIODIC_LONG_PART,
    CUBIC_LONG_PART,
    BELOW_SIXTH_POWER,
    BELOW_2Q_POWER,
    FOURTH_POWER,
    ONE_SIDE_UNEXTENDABLE,
    CROSSES_BOUNDARIES,
    NEXT_START_OUTSIDE,
)


@dataclass(frozen=True)
class PairClassification:
    pair: MaximalPair
    split_index: int
    witness_index: int
    q: int
    left_part: bytes
    right_part: bytes
    longer_part_exponent: Fraction
    body_exponent: Fraction
    labels: FrozenSet[str]
    # alternative readings of ONE-SIDE-UNEXTENDABLE, filled on request
    variants: Dict[str, bool] = field(default_factory=dict, compare=False)

    def has(self, label: str) -> bool:
        return label in self.labels


def _added_symbols(t: Text, pair: MaximalPair, delta: int):
    out = []
    for start in (pair.n, pair.m):
        out.append(extension_amounts(t, start, start + pair.l - 1, delta))
    return out


def one_side_unextendable(t, pair: MaximalPair, one_sided: bool = False) -> bool:
    """At least one occurrence gains at most one period length when extended
    periodically.  ``one_sided`` bounds each side separately instead of the
    total."""
    t = as_text(t)
    body = t.substring(pair.n, pair.n + pair.l - 1)
    delta = min_period(body)
    for left, right in _added_symbols(t, pair, delta):
        if (max(left, right) if one_sided else left + right) <= delta:
            return True
    return False


def classify(
    t,
    pair: MaximalPair,
    i: int,
    j: int,
    q: int,
    parse: Optional[Lz77Parse] = None,
    strict_variants: bool = False,
) -> PairClassification:
    """Classify ``pair`` with ``i`` splitting the occurrence at ``pair.n`` and
    ``j`` falling inside the occurrence at ``pair.m``."""
    t = as_text(t)
    n, m, l = pair.n, pair.m, pair.l
    if not n <= i <= n + l:
        raise ClassificationError(f"split index {i} outside [{n}, {n + l}]")
    if not m <= j <= m + l:
        raise ClassificationError(f"witness index {j} outside [{m}, {m + l}]")
    if q < 2:
        raise ParameterError("q must be at least 2")
    body = t.substring(n, n + l - 1)
    left = t.substring(n, i - 1)
    right = t.substring(i, n + l - 1)
    longer = left if len(left) >= len(right) else right
    longer_exp = exponent(longer)
    body_exp = exponent(body)

    labels = set()
    if longer_exp < q:
        labels.add(APERIODIC_LONG_PART)
    if longer_exp >= 3:
        delta = min_period(longer)
        if body[delta:] != body[:-delta]:
            labels.add(CUBIC_LONG_PART)
    if body_exp < 6:
        labels.add(BELOW_SIXTH_POWER)
    if body_exp < 2 * q:
        labels.add(BELOW_2Q_POWER)
    variants = {}
    if body_exp >= 4:
        labels.add(FOURTH_POWER)
        if one_side_unextendable(t, pair):
            labels.add(ONE_SIDE_UNEXTENDABLE)
        if strict_variants:
            variants["total"] = ONE_SIDE_UNEXTENDABLE in labels
            variants["per-side"] = one_side_unextendable(t, pair, one_sided=True)
    if parse is not None:
        starts = parse.starts
        if any(n <= s <= n + l for s in starts) and any(m <= s <= m + l for s in starts):
            labels.add(CROSSES_BOUNDARIES)
        if i in starts and exponent(left) < q and exponent(right) < q:
            k = starts.index(i)
            if k + 1 == len(starts) or not n <= starts[k + 1] <= n + l:
                labels.add(NEXT_START_OUTSIDE)
    return PairClassification(
        pair, i, j, q, left, right, longer_exp, body_exp, frozenset(labels), variants
    )


def orientations(pair: MaximalPair):
    yield pair
    yield pair.swapped()


def count_per_index_pair(
    t,
    pairs: Sequence[MaximalPair],
    i: int,
    j: int,
    label: str,
    q: int,
    parse: Optional[Lz77Parse] = None,
) -> int:
    """Copy classes with a member (in either orientation) that has ``i`` in
    its first and ``j`` in its second occurrence interval and carries
    ``label``."""
    t = as_text(t)
    if label not in LABELS:
        raise ParameterError(f"unknown label {label!r}")
    hit = set()
    for pair in pairs:
        if pair.copy_key in hit:
            continue
        for oriented in orientations(pair):
            n, m, l = oriented.triple
            if n <= i <= n + l and m <= j <= m + l:
                if classify(t, oriented, i, j, q, parse).has(label):
                    hit.add(pair.copy_key)
                    break
    return len(hit)


def unique_extensions(exts) -> List[PaddedExtension]:
    """One representative per content key, first occurrence kept."""
    seen = {}
    for e in exts:
        seen.setdefault(e.content_key, e)
    return list(seen.values())


def crossing_extensions(t, i: int, runs: Optional[List[PaddedExtension]] = None) -> List[PaddedExtension]:
    """Substantially different padded maximal periodic extensions of fourth
    powers with ``l-1 < i <= r+1``."""
    t = as_text(t)
    if not 1 <= i <= len(t) + 1:
        raise ParameterError(f"index {i} outside [1, {len(t) + 1}]")
    if runs is None:
        runs = fourth_power_runs(t)
    return unique_extensions(e for e in runs if e.crosses(i))


def _occurrences(data: bytes, w: bytes):
    k = data.find(w)
    while k >= 0:
        yield k + 1
        k = data.find(w, k + 1)


def cyclic_class_extensions(t, i: int, P: bytes) -> List[PaddedExtension]:
    """Members of :func:`crossing_extensions` whose core is the maximal
    periodic extension of an occurrence of some cyclic rotation of ``P``."""
    t = as_text(t)
    P = bytes(P)
    if not P or exponent(P) < 4:
        raise ParameterError("P must have exponent at least 4")
    cores = set()
    for k in {P[k:] + P[:k] for k in range(len(P))}:
        for start in _occurrences(t.data, k):
            cores.add(maximal_periodic_extension(t, start, start + len(k) - 1).core)
    runs = [e for e in fourth_power_runs(t) if e.core in cores and e.crosses(i)]
    return unique_extensions(runs)


def compatible(t, e1: PaddedExtension, e2: PaddedExtension) -> bool:
    t = as_text(t)
    return root_class(t, e1) == root_class(t, e2)


def pairs_from_extension_pair(
    t, e1: PaddedExtension, e2: PaddedExtension, copies: bool = False
) -> List[MaximalPair]:
    """Maximal pairs with a fourth-power body, one occurrence extending to
    ``e1`` and the other to ``e2``, that are ``ONE-SIDE-UNEXTENDABLE``.

    By default one representative (the smallest triple) per copy class is
    returned; ``copies=True`` returns every member.  One occurrence must start
    at its run's start, otherwise both would be preceded by the same symbol,
    so only those candidates are scanned.
    """
    t = as_text(t)
    if not compatible(t, e1, e2):
        raise CompatibilityError("extensions are not equal up to cyclic rotation")
    delta = e1.delta
    (a1, b1), (a2, b2) = e1.core, e2.core
    p = t.padded
    candidates = {(a1, y) for y in range(a2, b2 + 1)} | {(x, a2) for x in range(a1, b1 + 1)}
    found = set()
    for x, y in candidates:
        if x == y or p[x - 1] == p[y - 1]:
            continue
        l = lce(t, x, y)
        if l < 4 * delta or x + l - 1 > b1 or y + l - 1 > b2:
            continue
        pair = make_pair(t, min(x, y), max(x, y), l)
        if one_side_unextendable(t, pair):
            found.add(pair)
    found = sorted(found)
    if copies:
        return found
    reps = {}
    for pair in found:
        reps.setdefault(pair.copy_key, pair)
    return sorted(reps.values())


def extension_pairs(t, runs: Optional[List[PaddedExtension]] = None):
    """Unordered pairs (including ``e1 is e2``) of fourth-power runs that are
    equal up to cyclic rotation."""
    t = as_text(t)
    if runs is None:
        runs = fourth_power_runs(t)
    groups: Dict[tuple, List[PaddedExtension]] = {}
    for e in runs:
        groups.setdefault(root_class(t, e), []).append(e)
    for members in groups.values():
        for x in range(len(members)):
            for y in range(x, len(members)):
                yield members[x], members[y]


@dataclass(frozen=True)
class ClassRow:
    """Labels of one copy class at one index pair: a label is present when
    some member, in some orientation, carries it at ``(i, j)``."""

    copy_key: Tuple[bytes, bytes]
    i: int
    j: int
    representative: MaximalPair
    labels: FrozenSet[str]
    variants: Tuple[Tuple[str, bool], ...] = ()


def classify_index_pairs(
    t,
    pairs: Sequence[MaximalPair],
    q: int,
    universe: Sequence[int],
    parse: Optional[Lz77Parse] = None,
    strict_variants: bool = False,
) -> List[ClassRow]:
    """One row per (copy class, i, j) with ``i, j`` drawn from ``universe``."""
    t = as_text(t)
    U = sorted(set(universe))
    merged: Dict[tuple, list] = {}
    for pair in pairs:
        for oriented in orientations(pair):
            n, m, l = oriented.triple
            left = bisect_left(U, n)
            right = bisect_right(U, n + l)
            witnesses = U[bisect_left(U, m) : bisect_right(U, m + l)]
            for i in U[left:right]:
                for j in witnesses:
                    c = classify(t, oriented, i, j, q, parse, strict_variants)
                    key = (pair.copy_key, i, j)
                    if key not in merged:
                        merged[key] = [oriented, set(), {}]
                    merged[key][1] |= c.labels
                    for name, value in c.variants.items():
                        merged[key][2][name] = merged[key][2].get(name, False) or value
    rows = [
        ClassRow(key[0], key[1], key[2], rep, frozenset(labels), tuple(sorted(variants.items())))
        for key, (rep, labels, variants) in merged.items()
    ]
    rows.sort(key=lambda r: (r.i, r.j, r.copy_key))
    return rows
