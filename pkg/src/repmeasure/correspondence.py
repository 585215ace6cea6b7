"""Map from BWT run boundaries to maximal pairs, and the periodic
non-extendability check on the resulting pairs.

Boundary ``i`` (``2 <= i <= |S|+1``) sits between rotations ``pi_{i-1}`` and
``pi_i`` whose last symbols differ.  ``L`` is the common prefix length of
the suffixes of ``S$`` starting at ``pi_{i-1}+1`` and ``pi_i+1``; for
``L >= 1`` those two occurrences form the maximal pair
``(pi_{i-1}+1, pi_i+1, L)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from .bwt import run_count
from .periodicity import extension_amounts, periods
from .repeats import MaximalPair, make_pair
from .suffix import SuffixIndex
from .text import Text, as_text, require_length


@dataclass(frozen=True)
class RunBoundaryPair:
    boundary_index: int
    prev: int
    next: int
    lcp: int
    pair: Optional[MaximalPair]


def run_boundary_pairs(t, index: Optional[SuffixIndex] = None) -> List[RunBoundaryPair]:
    t = as_text(t)
    require_length(t, 1, "run_boundary_pairs")
    index = index or SuffixIndex(t.data)
    p = t.padded
    pi = [int(x) - 1 for x in index.sa]
    out = []
    for i in range(2, len(pi) + 1):
        a, b = pi[i - 2], pi[i - 1]
        if p[a] == p[b]:
            continue
        L = int(index.lcp[i - 1])
        pair = make_pair(t, a + 1, b + 1, L) if L >= 1 else None
        out.append(RunBoundaryPair(i, a, b, L, pair))
    return out


@dataclass(frozen=True)
class InjectivityReport:
    boundaries: int
    pairs: int
    distinct_pairs: int
    l0_count: int
    alphabet_size: int
    r: int

    @property
    def injective(self) -> bool:
        return self.pairs == self.distinct_pairs

    @property
    def l0_within_alphabet(self) -> bool:
        return self.l0_count <= self.alphabet_size

    @property
    def needs_sentinel_slack(self) -> bool:
        """True when only the looser ``|alphabet| + 1`` would cover ``L = 0``."""
        return self.l0_count == self.alphabet_size + 1

    @property
    def run_identity(self) -> bool:
        return self.boundaries + 1 == self.r

    @property
    def holds(self) -> bool:
        return self.injective and self.l0_within_alphabet and self.run_identity


def check_injectivity(t, boundaries: Optional[List[RunBoundaryPair]] = None) -> InjectivityReport:
    """Counts behind the boundary map; violations are reported, not raised."""
    t = as_text(t)
    if boundaries is None:
        boundaries = run_boundary_pairs(t)
    triples = [b.pair.triple for b in boundaries if b.pair is not None]
    return InjectivityReport(
        boundaries=len(boundaries),
        pairs=len(triples),
        distinct_pairs=len(set(triples)),
        l0_count=sum(1 for b in boundaries if b.pair is None),
        alphabet_size=len(t.alphabet),
        r=run_count(t),
    )


class PeriodCertificate(NamedTuple):
    period: int
    added: Tuple[int, int]  # symbols added around the occurrence at prev+1 / next+1
    sides: Tuple[str, ...]  # "prev" and/or "next": sides adding at most ``period``


@dataclass(frozen=True)
class NonextendabilityVerdict:
    boundary: RunBoundaryPair
    certificates: Tuple[PeriodCertificate, ...]

    @property
    def holds(self) -> bool:
        return all(c.sides for c in self.certificates)

    @property
    def failures(self) -> Tuple[int, ...]:
        return tuple(c.period for c in self.certificates if not c.sides)


def check_nonextendability(t, b: RunBoundaryPair) -> NonextendabilityVerdict:
    """For every period ``d`` of the body, which occurrences gain at most
    ``d`` symbols from their maximal ``d``-periodic extension."""
    t = as_text(t)
    if b.pair is None:
        raise ValueError("boundary carries no pair (L = 0)")
    L = b.lcp
    body = t.substring(b.next + 1, b.next + L)
    certs = []
    for d in periods(body):
        added = []
        sides = []
        for name, start in (("prev", b.prev + 1), ("next", b.next + 1)):
            left, right = extension_amounts(t, start, start + L - 1, d)
            added.append(left + right)
            if left + right <= d:
                sides.append(name)
        certs.append(PeriodCertificate(d, tuple(added), tuple(sides)))
    return NonextendabilityVerdict(b, tuple(certs))


class SweepResult(NamedTuple):
    boundaries: int
    l0_count: int
    r: int
    injective: bool
    violations: Tuple[Tuple[int, int], ...]  # (boundary index, period)


def _gain_at_most(p: bytes, n: int, start: int, end: int, d: int) -> bool:
    """Whether the maximal d-periodic extension of ``p[start..end]`` adds at
    most ``d`` symbols, stopping as soon as it exceeds that."""
    budget = d
    k = start - 1
    while k >= 1 and p[k] == p[k + d]:
        budget -= 1
        if budget < 0:
            return False
        k -= 1
    k = end + 1
    while k <= n and p[k] == p[k - d]:
        budget -= 1
        if budget < 0:
            return False
        k += 1
    return True


def sweep(data: bytes) -> SweepResult:
    """Self-contained check of the whole boundary map of one string.

    Sorts suffixes directly and re-derives every quantity without the suffix
    index, so it doubles as a second route for :func:`run_boundary_pairs`
    and :func:`check_nonextendability`.  Meant for exhaustive sweeps.
    """
    n = len(data)
    p = b"\x00" + data + b"\x00"
    order = sorted(range(n + 1), key=lambda k: p[k + 1 :])
    boundaries = 0
    l0 = 0
    runs = 1
    seen = set()
    injective = True
    bad = []
    for i in range(1, n + 1):
        a, b = order[i - 1], order[i]
        if p[a] == p[b]:
            continue
        runs += 1
        boundaries += 1
        L = 0
        while p[a + 1 + L] == p[b + 1 + L] and b + 1 + L <= n and a + 1 + L <= n:
            L += 1
        if L == 0:
            l0 += 1
            continue
        if (a, b) in seen:
            injective = False
        seen.add((a, b))
        body = p[b + 1 : b + 1 + L]
        for d in range(1, L + 1):
            if d < L and body[d:] != body[:-d]:
                continue
            if not (
                _gain_at_most(p, n, a + 1, a + L, d) or _gain_at_most(p, n, b + 1, b + L, d)
            ):
                bad.append((i + 1, d))
    return SweepResult(boundaries, l0, runs, injective, tuple(bad))
