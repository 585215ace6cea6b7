"""Periods, exponents, power-freeness and maximal periodic extensions.

Exponents are exact :class:`fractions.Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .errors import InvalidOccurrenceError, RangeError
from .text import EXPONENT_CAP, Text, as_text, require_length


def prefix_function(w: bytes) -> List[int]:
    """``pi[k]`` is the longest proper border of ``w[:k+1]``."""
    pi = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        c = w[i]
        while k and w[k] != c:
            k = pi[k - 1]
        if w[k] == c:
            k += 1
        pi[i] = k
    return pi


def prefix_periods(w: bytes) -> List[int]:
    """Minimal period of every prefix: ``out[k]`` is the period of ``w[:k]``
    (``out[0] = 0`` for the empty prefix)."""
    pi = prefix_function(w)
    return [0] + [k + 1 - b for k, b in enumerate(pi)]


def min_period(w: bytes) -> int:
    if not w:
        raise ValueError("min_period of the empty word")
    return len(w) - prefix_function(w)[-1]


def periods(w: bytes) -> List[int]:
    """All periods ``1..|w|`` of ``w`` in increasing order (border chain)."""
    if not w:
        return []
    pi = prefix_function(w)
    out = []
    b = pi[-1]
    while b:
        out.append(len(w) - b)
        b = pi[b - 1]
    out.append(len(w))
    return out


def exponent(w: bytes) -> Fraction:
    """``|w| / min_period(w)``; the empty word has exponent 0."""
    if not w:
        return Fraction(0)
    return Fraction(len(w), min_period(w))


def is_primitive(w: bytes) -> bool:
    """True unless ``w = u^k`` for some word ``u`` and integer ``k >= 2``."""
    if not w:
        return False
    p = min_period(w)
    return p == len(w) or len(w) % p != 0


@dataclass(frozen=True)
class PeriodView:
    min_period: int
    exponent: Fraction
    primitive: bool


def period_view(w: bytes) -> PeriodView:
    return PeriodView(min_period(w), exponent(w), is_primitive(w))


def _longest_true_run(mask: np.ndarray) -> Tuple[int, int]:
    """Length and start of the longest run of True values."""
    if not mask.any():
        return 0, 0
    edges = np.diff(np.concatenate(([0], mask.view(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    k = int(np.argmax(ends - starts))
    return int(ends[k] - starts[k]), int(starts[k])


def max_exponent_witness(t, cap=EXPONENT_CAP) -> Tuple[Fraction, int, int]:
    """Largest exponent of any substring, with a 1-based interval attaining it.

    For every shift ``d`` the longest stretch with ``S[k] = S[k+d]`` gives the
    longest ``d``-periodic substring; every substring of minimal period ``d``
    lies in such a stretch, so maximising over ``d`` is exact.  Quadratic.
    """
    t = as_text(t)
    require_length(t, 1, "max_exponent")
    if cap is not None:
        cap.check(t, "max_exponent")
    a = np.frombuffer(t.data, dtype=np.uint8)
    n = len(a)
    best = (Fraction(1), 1, 1)
    for d in range(1, n):
        # a d-periodic stretch of length L has exponent (L)/d; only d < n/best
        # can beat the current maximum
        if Fraction(n, d) <= best[0]:
            break
        run, start = _longest_true_run(a[:-d] == a[d:])
        if run:
            value = Fraction(run + d, d)
            if value > best[0]:
                best = (value, start + 1, start + run + d)
    return best


def max_exponent(t, cap=EXPONENT_CAP) -> Fraction:
    return max_exponent_witness(t, cap)[0]


def q_free_witness(t, cap=EXPONENT_CAP) -> int:
    """Smallest integer ``q >= 2`` such that ``S`` has no substring of
    exponent ``>= q``."""
    e = max_exponent(t, cap)
    return max(2, e.numerator // e.denominator + 1)


def power_witness(t, q: int, cap=EXPONENT_CAP) -> Optional[bytes]:
    """A substring of exponent ``>= q`` or ``None`` when ``S`` is q-power-free."""
    t = as_text(t)
    e, lo, hi = max_exponent_witness(t, cap)
    if e < q:
        return None
    return t.substring(lo, hi)


@dataclass(frozen=True)
class PaddedExtension:
    """Maximal ``delta``-periodic extension ``core = (l', r')`` together with
    its padded interval ``(l'-1, r'+1)`` and that interval's content."""

    delta: int
    core: Tuple[int, int]
    content_key: bytes

    @property
    def padded(self) -> Tuple[int, int]:
        return self.core[0] - 1, self.core[1] + 1

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.core[1] - self.core[0] + 1, self.delta)

    def crosses(self, i: int) -> bool:
        lo, hi = self.padded
        return lo < i <= hi


def extension_amounts(t: Text, l: int, r: int, delta: int) -> Tuple[int, int]:
    """Symbols added on the left and on the right by the maximal
    ``delta``-periodic extension of ``S[l..r]`` (assumed ``delta``-periodic)."""
    p = t.padded
    n = len(t)
    left = 0
    while l - left - 1 >= 1 and p[l - left - 1] == p[l - left - 1 + delta]:
        left += 1
    right = 0
    while r + right + 1 <= n and p[r + right + 1] == p[r + right + 1 - delta]:
        right += 1
    return left, right


def maximal_periodic_extension(t, l: int, r: int, delta: Optional[int] = None) -> PaddedExtension:
    t = as_text(t)
    n = len(t)
    if not 1 <= l <= r <= n:
        raise InvalidOccurrenceError(f"occurrence ({l}, {r}) outside [1, {n}]")
    body = t.substring(l, r)
    if delta is None:
        delta = min_period(body)
    if not 1 <= delta <= r - l + 1:
        raise InvalidOccurrenceError(f"period {delta} not in [1, {r - l + 1}]")
    if body[delta:] != body[:-delta] and delta < len(body):
        raise InvalidOccurrenceError(f"S[{l}..{r}] is not {delta}-periodic")
    left, right = extension_amounts(t, l, r, delta)
    lo, hi = l - left, r + right
    return PaddedExtension(delta, (lo, hi), t.substring(lo - 1, hi + 1))


def primitive_square_suffixes(t, i: int) -> List[int]:
    """Lengths ``2d`` such that ``S[i-2d..i-1] = uu`` with ``u`` primitive."""
    t = as_text(t)
    if not 2 <= i <= len(t) + 1:
        raise RangeError(f"index {i} outside [2, {len(t) + 1}]")
    prefix = t.data[: i - 1]
    out = []
    for d in range(1, len(prefix) // 2 + 1):
        u = prefix[len(prefix) - d :]
        if prefix[len(prefix) - 2 * d : len(prefix) - d] == u and is_primitive(u):
            out.append(2 * d)
    return out


def primitive_square_prefixes(w: bytes) -> List[int]:
    """Root lengths ``d`` such that ``w`` starts with ``uu``, ``u`` primitive."""
    return [d for d in range(1, len(w) // 2 + 1) if w[:d] == w[d : 2 * d] and is_primitive(w[:d])]


def fourth_power_runs(t) -> List[PaddedExtension]:
    """Every maximal periodic extension of a substring of exponent >= 4.

    These are exactly the maximal ``d``-periodic intervals of length at least
    ``4d`` whose minimal period is ``d``.  Sorted by core.
    """
    t = as_text(t)
    a = np.frombuffer(t.data, dtype=np.uint8)
    n = len(a)
    found = []
    for d in range(1, n // 4 + 1):
        mask = a[:-d] == a[d:]
        edges = np.diff(np.concatenate(([0], mask.view(np.int8), [0])))
        starts = np.flatnonzero(edges == 1)
        ends = np.flatnonzero(edges == -1)
        keep = ends - starts >= 3 * d
        for s, e in zip(starts[keep], ends[keep]):
            lo, hi = int(s) + 1, int(e) + d
            core = t.data[lo - 1 : hi]
            # a smaller minimal period of a run this long must divide d
            if any(d % p == 0 and core[p:] == core[:-p] for p in range(1, d)):
                continue
            found.append(PaddedExtension(d, (lo, hi), t.substring(lo - 1, hi + 1)))
    found.sort(key=lambda e: (e.core, e.delta))
    return found


def least_rotation(w: bytes) -> bytes:
    """Lexicographically least cyclic rotation (Booth's algorithm)."""
    if not w:
        return w
    s = w + w
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        c = s[j]
        i = f[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != s[k + i + 1]:
            if c < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k : k + len(w)]


def root_class(t: Text, ext: PaddedExtension) -> Tuple[int, bytes]:
    """Key identifying extensions equal up to cyclic rotation."""
    lo = ext.core[0]
    return ext.delta, least_rotation(t.data[lo - 1 : lo - 1 + ext.delta])


# -- periodicity property checks -----------------------------------------------


def two_cubes_counterexamples(w: bytes) -> List[Tuple[str, int, int]]:
    """Prefix (and suffix) pairs ``P1, P2`` of exponent >= 3 with
    ``|P1| <= |P2| <= 2|P1|`` but different minimal periods."""
    bad = []
    for side, word in (("prefix", w), ("suffix", w[::-1])):
        per = prefix_periods(word)
        cubes = [k for k in range(1, len(word) + 1) if k >= 3 * per[k]]
        for a in cubes:
            for b in cubes:
                if a <= b <= 2 * a and per[a] != per[b]:
                    bad.append((side, a, b))
    return bad


def three_squares_counterexamples(w: bytes, strict: bool = True) -> List[Tuple[str, int, int, int]]:
    """Triples of primitive square prefixes (or suffixes) ``u^2, v^2, w^2``
    with ``|u| < |v| < |w|`` that violate ``|w| > |u| + |v|``, or the weaker
    ``|w| >= |u| + |v|`` when ``strict`` is false."""
    bad = []
    for side, word in (("prefix", w), ("suffix", w[::-1])):
        roots = primitive_square_prefixes(word)
        for x in range(len(roots)):
            for y in range(x + 1, len(roots)):
                for z in range(y + 1, len(roots)):
                    total = roots[x] + roots[y]
                    if roots[z] < total or (strict and roots[z] == total):
                        bad.append((side, roots[x], roots[y], roots[z]))
    return bad
