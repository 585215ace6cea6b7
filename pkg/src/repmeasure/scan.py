"""Per-index-pair class counts without enumerating maximal pairs.

Fix a split index ``i``.  Every maximal pair ``(n, m, l)`` with
``i in [n, n+l]`` is pinned down by the partner position ``i' = m + (i-n)``:
walking back from ``i-1, i'-1`` gives ``b = i - n`` and walking forward from
``i, i'`` gives ``l - b``.  So one LCS and one LCE query per ``i'`` produce
all such pairs, and the witnesses ``j`` are the universe positions in
``[m, m+l]``.

Copy classes are keyed by the body (lcp-interval start and depth in the
suffix array) plus the unordered pair of context symbol pairs, which is the
same information as the padded occurrence strings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .lz77 import Lz77Parse, lz77
from .periodicity import min_period, prefix_periods
from .suffix import SuffixIndex
from .taxonomy import APERIODIC_LONG_PART, BELOW_2Q_POWER, CUBIC_LONG_PART
from .text import Text, as_text

SCANNED_LABELS = (APERIODIC_LONG_PART, CUBIC_LONG_PART, BELOW_2Q_POWER)


@dataclass
class IndexPairCounts:
    """Maximum over index pairs of the per-pair class count, per label."""

    q: int
    maxima: Dict[str, int] = field(default_factory=dict)
    argmax: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    split_indices: int = 0
    exhaustive: bool = True


class _Context:
    def __init__(self, t: Text, index: Optional[SuffixIndex] = None):
        self.t = t
        self.N = len(t)
        self.index = index or SuffixIndex(t.data)
        self.rindex = SuffixIndex(t.data[::-1])
        self.P = np.frombuffer(t.padded, dtype=np.uint8).astype(np.int64)
        self.body_periods: Dict[int, int] = {}

    def lcs(self, x, y):
        """Common suffix length of ``S[..x]`` and ``S[..y]`` (0 at x or y = 0)."""
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        out = np.zeros(x.shape, dtype=np.int64)
        ok = (x >= 1) & (y >= 1)
        if np.any(ok):
            out[ok] = self.rindex.lce(self.N + 1 - x[ok], self.N + 1 - y[ok])
        return out

    def body_period(self, keys, starts, lengths):
        """Minimal periods of bodies, cached by body key."""
        out = np.empty(len(keys), dtype=np.int64)
        data = self.t.data
        for k, (key, s, l) in enumerate(zip(keys.tolist(), starts.tolist(), lengths.tolist())):
            per = self.body_periods.get(key)
            if per is None:
                per = min_period(data[s - 1 : s - 1 + l])
                self.body_periods[key] = per
            out[k] = per
        return out


def _period_table(word: bytes) -> np.ndarray:
    return np.asarray(prefix_periods(word), dtype=np.int64)


def _distinct_per_group(group: np.ndarray, key_a: np.ndarray, key_b: np.ndarray):
    """Number of distinct ``(key_a, key_b)`` per group value, and the group
    with the most."""
    if not len(group):
        return 0, None
    order = np.lexsort((key_b, key_a, group))
    g, a, b = group[order], key_a[order], key_b[order]
    new = np.ones(len(g), dtype=bool)
    new[1:] = (g[1:] != g[:-1]) | (a[1:] != a[:-1]) | (b[1:] != b[:-1])
    counts = np.bincount(g[new])
    best = int(np.argmax(counts))
    return int(counts[best]), best


def scan_index_pairs(
    t,
    q: int,
    parse: Optional[Lz77Parse] = None,
    universe: Optional[Sequence[int]] = None,
    split_indices: Optional[Sequence[int]] = None,
    index: Optional[SuffixIndex] = None,
) -> IndexPairCounts:
    """Max over ``(i, j)`` in ``universe`` (default: LZ77 factor starts,
    including ``|S|+1``) of the number of copy classes carrying each label.

    ``split_indices`` restricts the ``i`` side (used for sampling)."""
    t = as_text(t)
    ctx = _Context(t, index)
    N = ctx.N
    P = ctx.P
    if universe is None:
        universe = (parse or lz77(t)).starts
    U = np.asarray(sorted(set(universe)), dtype=np.int64)
    result = IndexPairCounts(q, {label: 0 for label in SCANNED_LABELS})
    exhaustive = split_indices is None
    I = U if exhaustive else np.asarray(sorted(set(split_indices)), dtype=np.int64)
    result.exhaustive = exhaustive
    result.split_indices = len(I)
    others_all = np.arange(1, N + 2, dtype=np.int64)
    for i in I.tolist():
        others = others_all[others_all != i]
        b = ctx.lcs(i - 1, others - 1)
        f = ctx.index.lce(i, others) if i <= N else np.zeros(len(others), dtype=np.int64)
        l = b + f
        keep = l >= 1
        if not np.any(keep):
            continue
        b, f, l, others = b[keep], f[keep], l[keep], others[keep]
        n = i - b
        m = others - b
        lo = np.searchsorted(U, m, side="left")
        hi = np.searchsorted(U, m + l, side="right")
        width = hi - lo
        has = width > 0
        if not np.any(has):
            continue
        b, f, l, n, m, lo, width = b[has], f[has], l[has], n[has], m[has], lo[has], width[has]

        # minimal periods of the left part S[i-b..i-1] and right part S[i..i+f-1]
        maxb, maxf = int(b.max()), int(f.max())
        data = t.data
        left_per = _period_table(data[max(0, i - 1 - maxb) : i - 1][::-1])
        right_per = _period_table(data[i - 1 : i - 1 + maxf])
        left_longer = b >= f
        long_len = np.where(left_longer, b, f)
        long_per = np.where(left_longer, left_per[b], right_per[f])

        aperiodic = long_len < q * long_per  # l >= 1, so the longer part is never empty
        cubic = (long_len > 0) & (long_len >= 3 * long_per)
        if np.any(cubic):
            d = long_per[cubic]
            run = ctx.index.lce(n[cubic], n[cubic] + d)
            cubic[cubic] = run < l[cubic] - d

        lb = ctx.index.interval_start(ctx.index.rank[n], l)
        body = lb * (N + 2) + l
        below_2q = aperiodic.copy()
        rest = ~aperiodic
        if np.any(rest):
            per = ctx.body_period(body[rest], n[rest], l[rest])
            below_2q[rest] = l[rest] < 2 * q * per

        ca = (P[n - 1] << 8) | P[n + l]
        cb = (P[m - 1] << 8) | P[m + l]
        contexts = (np.minimum(ca, cb) << 16) | np.maximum(ca, cb)

        # expand each pair over the witnesses j in [m, m+l]
        rows = np.repeat(np.arange(len(l)), width)
        offsets = np.arange(len(rows)) - np.repeat(np.cumsum(width) - width, width)
        j_slot = lo[rows] + offsets
        for label, mask in (
            (APERIODIC_LONG_PART, aperiodic),
            (CUBIC_LONG_PART, cubic),
            (BELOW_2Q_POWER, below_2q),
        ):
            sel = mask[rows]
            count, best = _distinct_per_group(j_slot[sel], body[rows][sel], contexts[rows][sel])
            if count > result.maxima[label]:
                result.maxima[label] = count
                result.argmax[label] = (i, int(U[best]))
    return result
