"""Suffix arrays, LCP arrays and constant-time LCE queries.

All arrays here address ``S$`` with 1-based text positions ``1..|S|+1``;
position ``|S|+1`` is the sentinel suffix, which sorts first.
"""
from __future__ import annotations

import numpy as np

_SMALL = 64


def _codes(data: bytes) -> np.ndarray:
    return np.frombuffer(bytes(data) + b"\x00", dtype=np.uint8).astype(np.int64)


def _relabel(first, second, order):
    a = first[order]
    b = second[order]
    fresh = np.empty(len(order), dtype=bool)
    fresh[0] = False
    fresh[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1])
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.cumsum(fresh)
    return rank


def _prefix_doubling(codes: np.ndarray) -> np.ndarray:
    n = len(codes)
    rank = codes.copy()
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        rank = _relabel(rank, second, order)
        if rank[order[-1]] == n - 1 or k >= n:
            return order
        k *= 2


def suffix_array(data: bytes, method: str = "auto") -> np.ndarray:
    """Suffix array of ``data + $`` as 1-based start positions.

    ``method`` is ``"doubling"`` (numpy prefix doubling), ``"sort"`` (comparison
    sort of the suffixes) or ``"auto"``, which picks by length.  The sentinel
    is unique and smallest, so suffix order equals rotation order.
    """
    if method == "auto":
        method = "sort" if len(data) < _SMALL else "doubling"
    if method == "sort":
        data = bytes(data)
        order = sorted(range(len(data) + 1), key=lambda p: data[p:])
        return np.asarray(order, dtype=np.int64) + 1
    if method == "doubling":
        return _prefix_doubling(_codes(data)) + 1
    raise ValueError(f"unknown suffix-array method {method!r}")


def cyclic_order(data: bytes) -> np.ndarray:
    """Start indices (0-based) of the cyclic rotations of ``data`` in sorted
    order; equal rotations keep ascending start index."""
    n = len(data)
    idx = np.arange(n)
    rank = np.frombuffer(bytes(data), dtype=np.uint8).astype(np.int64)
    k = 1
    order = np.argsort(rank, kind="stable")
    while k < n:
        second = rank[(idx + k) % n]
        order = np.lexsort((idx, second, rank))
        rank = _relabel(rank, second, order)
        k *= 2
    return np.lexsort((idx, rank))


def lcp_array(data: bytes, sa: np.ndarray) -> np.ndarray:
    """Kasai LCP: ``lcp[r]`` is the common-prefix length of the suffixes at
    ranks ``r-1`` and ``r``; ``lcp[0] = 0``."""
    s = bytes(data) + b"\x00"
    n = len(s)
    sa0 = [int(p) - 1 for p in sa]
    rank = [0] * n
    for r, p in enumerate(sa0):
        rank[p] = r
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = rank[p]
        if r == 0:
            h = 0
            continue
        q = sa0[r - 1]
        while s[p + h] == s[q + h] and s[p + h] != 0:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int64)


class SparseMin:
    """Range-minimum queries over a fixed integer array."""

    def __init__(self, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        self.levels = [values]
        width = 1
        while 2 * width <= len(values):
            prev = self.levels[-1]
            self.levels.append(np.minimum(prev[:-width], prev[width:]))
            width *= 2

    def query(self, lo, hi):
        """Minimum of ``values[lo..hi]`` (inclusive, ``lo <= hi``)."""
        lo, hi = np.broadcast_arrays(np.asarray(lo, dtype=np.int64), np.asarray(hi, dtype=np.int64))
        span = np.maximum(hi - lo + 1, 1)
        # frexp exponent minus one is floor(log2) for positive integers
        k = (np.frexp(span.astype(np.float64))[1] - 1).astype(np.int64)
        out = np.empty(lo.shape, dtype=np.int64)
        for level in np.unique(k):
            sel = k == level
            table = self.levels[level]
            out[sel] = np.minimum(table[lo[sel]], table[hi[sel] - (1 << level) + 1])
        return out


class SuffixIndex:
    """Suffix array, inverse and LCP of ``S$`` with vectorised LCE queries."""

    def __init__(self, data: bytes, method: str = "auto"):
        self.data = bytes(data)
        self.n = len(self.data)
        self.sa = suffix_array(self.data, method)
        self.rank = np.zeros(self.n + 2, dtype=np.int64)
        self.rank[self.sa] = np.arange(self.n + 1)
        self.lcp = lcp_array(self.data, self.sa)
        self._rmq = SparseMin(self.lcp)

    def lce(self, p, q):
        """LCE of 1-based positions in ``S$``; never counts the sentinel."""
        p, q = np.broadcast_arrays(np.asarray(p, dtype=np.int64), np.asarray(q, dtype=np.int64))
        rp = self.rank[p]
        rq = self.rank[q]
        lo = np.minimum(rp, rq) + 1
        hi = np.maximum(rp, rq)
        same = rp == rq
        out = np.empty(p.shape, dtype=np.int64)
        diff = ~same
        if np.any(diff):
            out[diff] = self._rmq.query(lo[diff], hi[diff])
        if np.any(same):
            out[same] = self.n + 1 - p[same]
        return out

    def interval_start(self, ranks, depths):
        """Leftmost rank of the lcp-interval of the given depth that contains
        each rank, i.e. the smallest ``x`` with ``lcp[x+1..rank] >= depth``."""
        cur = np.asarray(ranks, dtype=np.int64).copy()
        depths = np.asarray(depths, dtype=np.int64)
        for level in range(len(self._rmq.levels) - 1, -1, -1):
            width = 1 << level
            start = cur - width + 1
            ok = start >= 1
            if not np.any(ok):
                continue
            table = self._rmq.levels[level]
            ok &= table[np.where(ok, start, 0)] >= depths
            cur = np.where(ok, cur - width, cur)
        return cur
