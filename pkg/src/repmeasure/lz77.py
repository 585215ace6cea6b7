"""Self-referential LZ77 factorisation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .suffix import suffix_array
from .text import Text, as_text, require_length

FRESH = "fresh-symbol"
REPEATED = "repeated-prefix"


@dataclass(frozen=True)
class Factor:
    start: int
    length: int
    kind: str


@dataclass(frozen=True)
class Lz77Parse:
    factors: Tuple[Factor, ...]
    length: int

    @property
    def z(self) -> int:
        return len(self.factors)

    @property
    def starts(self) -> Tuple[int, ...]:
        """``s_1..s_{z+1}``; the last entry is the sentinel factor of ``S$``."""
        return tuple(f.start for f in self.factors) + (self.length + 1,)

    def contents(self, t) -> list:
        t = as_text(t)
        return [t.data[f.start - 1 : f.start - 1 + f.length] for f in self.factors]


def _previous_smaller(sa):
    """For each rank, the nearest rank to the left/right holding a smaller
    text position (-1 when none)."""
    n = len(sa)
    psv = [-1] * n
    nsv = [-1] * n
    stack = []
    for r in range(n):
        p = sa[r]
        while stack and sa[stack[-1]] > p:
            nsv[stack.pop()] = r
        psv[r] = stack[-1] if stack else -1
        stack.append(r)
    return psv, nsv


def lz77(t) -> Lz77Parse:
    """Greedy factorisation: each factor is a symbol not seen before, or the
    longest prefix of the remaining suffix that also starts at an earlier
    position (overlap allowed)."""
    t = as_text(t)
    require_length(t, 1, "lz77")
    data = t.data
    n = len(data)
    sa = [int(p) for p in suffix_array(data)]
    rank = [0] * (n + 2)
    for r, p in enumerate(sa):
        rank[p] = r
    psv, nsv = _previous_smaller(sa)
    padded = t.padded

    def match(p, q):
        k = 0
        while padded[p + k] == padded[q + k] and p + k <= n:
            k += 1
        return k

    factors = []
    pos = 1
    while pos <= n:
        r = rank[pos]
        best = 0
        for cand in (psv[r], nsv[r]):
            if cand >= 0:
                best = max(best, match(pos, sa[cand]))
        if best == 0:
            factors.append(Factor(pos, 1, FRESH))
            pos += 1
        else:
            factors.append(Factor(pos, best, REPEATED))
            pos += best
    return Lz77Parse(tuple(factors), n)


def factor_starts(parse: Lz77Parse) -> Tuple[int, ...]:
    return parse.starts
