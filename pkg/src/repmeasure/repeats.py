"""Maximal pairs, maximal repeats, copy classes and CDAWG arc counts."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from .periodicity import min_period
from .suffix import SuffixIndex
from .text import EXHAUSTIVE_CAP, Cap, Text, as_text, require_length


@dataclass(frozen=True, order=True)
class MaximalPair:
    """Triple ``(n, m, l)``.  Enumerations return ``n < m``; a swapped triple
    is the same pair seen from the other occurrence."""

    n: int
    m: int
    l: int
    copy_key: Tuple[bytes, bytes] = field(compare=False, default=None)

    def swapped(self) -> "MaximalPair":
        return MaximalPair(self.m, self.n, self.l, self.copy_key)

    def canonical(self) -> "MaximalPair":
        return self if self.n < self.m else self.swapped()

    @property
    def triple(self) -> Tuple[int, int, int]:
        return self.n, self.m, self.l


def copy_key(t: Text, n: int, m: int, l: int) -> Tuple[bytes, bytes]:
    """Unordered pair of the padded occurrences ``S[n-1..n+l]`` and
    ``S[m-1..m+l]``, sorted with the sentinel smallest."""
    p = t.padded
    a = p[n - 1 : n + l + 1]
    b = p[m - 1 : m + l + 1]
    return (a, b) if a <= b else (b, a)


def make_pair(t: Text, n: int, m: int, l: int) -> MaximalPair:
    return MaximalPair(n, m, l, copy_key(t, n, m, l))


def pair_arrays(t) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All maximal pairs as arrays ``(n, m, l)`` with ``n < m``.

    On the diagonal ``m = n + d`` the pairs are exactly the maximal runs of
    positions where ``S[k] = S[k+d]``: left-maximality is the run start and the
    run end is where the symbols (or the trailing sentinel) first differ.
    """
    t = as_text(t)
    a = np.frombuffer(t.data, dtype=np.uint8)
    size = len(a)
    ns, ms, ls = [], [], []
    for d in range(1, size):
        mask = a[: size - d] == a[d:]
        edges = np.diff(np.concatenate(([0], mask.view(np.int8), [0])))
        starts = np.flatnonzero(edges == 1)
        if len(starts):
            ends = np.flatnonzero(edges == -1)
            ns.append(starts + 1)
            ms.append(starts + 1 + d)
            ls.append(ends - starts)
    if not ns:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    n = np.concatenate(ns).astype(np.int64)
    m = np.concatenate(ms).astype(np.int64)
    l = np.concatenate(ls).astype(np.int64)
    order = np.lexsort((m, n))
    return n[order], m[order], l[order]


def enumerate_maximal_pairs(t, cap: Cap = EXHAUSTIVE_CAP) -> List[MaximalPair]:
    t = as_text(t)
    require_length(t, 1, "enumerate_maximal_pairs")
    if cap is not None:
        cap.check(t, "enumerate_maximal_pairs")
    n, m, l = pair_arrays(t)
    return [make_pair(t, int(a), int(b), int(c)) for a, b, c in zip(n, m, l)]


def copy_classes(pairs) -> Dict[Tuple[bytes, bytes], List[MaximalPair]]:
    """Group pairs that are copies of each other, keyed by their copy key."""
    classes = defaultdict(list)
    for p in pairs:
        classes[p.copy_key].append(p)
    return dict(classes)


# -- lcp-interval traversal --------------------------------------------------


class Node(NamedTuple):
    """Internal suffix-tree node of ``S$``: the ranks ``lb..rb`` share a
    prefix of length ``depth``.  ``children`` holds ``(first rank, mask of
    preceding symbols)`` per child, in rank order."""

    depth: int
    lb: int
    rb: int
    children: Tuple[Tuple[int, int], ...]

    @property
    def left_mask(self) -> int:
        out = 0
        for _, mask in self.children:
            out |= mask
        return out


def internal_nodes(index: SuffixIndex) -> Iterator[Node]:
    """Bottom-up walk over the lcp-intervals (root included, depth 0)."""
    sa = index.sa
    lcp = index.lcp
    padded = b"\x00" + index.data + b"\x00"
    total = len(sa)

    def leaf(r):
        return 1 << padded[int(sa[r]) - 1]

    # each stack entry: [depth, lb, children]
    stack = [[0, 0, []]]
    pending = (0, leaf(0))
    for r in range(1, total + 1):
        h = int(lcp[r]) if r < total else 0
        lb = r - 1
        while h < stack[-1][0]:
            depth, start, children = stack.pop()
            children.append(pending)
            node = Node(depth, start, r - 1, tuple(children))
            yield node
            pending = (start, node.left_mask)
            lb = start
        if r == total:
            break
        if h > stack[-1][0]:
            stack.append([h, lb, [pending]])
        else:
            stack[-1][2].append(pending)
        pending = (r, leaf(r))
    depth, start, children = stack.pop()
    children.append(pending)
    yield Node(depth, start, total - 1, tuple(children))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def node_pair_classes(node: Node) -> int:
    """Copy classes of maximal pairs whose body is the node's label.

    A class is an unordered pair of realised contexts ``(a, b), (a', b')`` with
    ``a != a'`` and ``b != b'``.  The right symbol identifies the child, so the
    count runs over pairs of children.
    """
    masks = [m for _, m in node.children]
    total = 0
    for x in range(len(masks)):
        for y in range(x + 1, len(masks)):
            total += _popcount(masks[x]) * _popcount(masks[y]) - _popcount(masks[x] & masks[y])
    return total


@dataclass(frozen=True)
class MaximalRepeat:
    content: bytes
    occurrence_count: int
    left_extensions: frozenset
    right_extensions: frozenset
    first_occurrence: int = field(compare=False, default=0)


def _repeat_nodes(t: Text, index: Optional[SuffixIndex] = None):
    index = index or SuffixIndex(t.data)
    for node in internal_nodes(index):
        if node.depth > 0 and _popcount(node.left_mask) >= 2:
            yield node


def _node_repeat(t: Text, index: SuffixIndex, node: Node) -> MaximalRepeat:
    p = t.padded
    start = int(index.sa[node.lb])
    left = frozenset(c for c in range(256) if node.left_mask >> c & 1)
    right = frozenset(p[int(index.sa[x]) + node.depth] for x, _ in node.children)
    positions = [int(q) for q in index.sa[node.lb : node.rb + 1]]
    return MaximalRepeat(
        p[start : start + node.depth], node.rb - node.lb + 1, left, right, min(positions)
    )


def enumerate_maximal_repeats(t, cap: Cap = EXHAUSTIVE_CAP) -> List[MaximalRepeat]:
    """Nonempty maximal repeats, sorted by (length, content)."""
    t = as_text(t)
    require_length(t, 1, "enumerate_maximal_repeats")
    if cap is not None:
        cap.check(t, "enumerate_maximal_repeats")
    index = SuffixIndex(t.data)
    reps = [_node_repeat(t, index, node) for node in _repeat_nodes(t, index)]
    reps.sort(key=lambda r: (len(r.content), r.content))
    return reps


@dataclass(frozen=True)
class CdawgStats:
    maximal_repeat_count: int
    right_extension_total: int
    root_arcs: int

    @property
    def arc_total(self) -> int:
        return self.right_extension_total + self.root_arcs


@dataclass(frozen=True)
class RepeatSummary:
    """Counts derived from one walk over the suffix tree of ``S$``."""

    cdawg: CdawgStats
    pair_classes: int
    pair_classes_below_sixth_power: int
    classes_by_exponent: Tuple[Tuple[Fraction, int], ...]


def cdawg_stats(t, cap: Optional[Cap] = EXHAUSTIVE_CAP) -> CdawgStats:
    t = as_text(t)
    require_length(t, 1, "cdawg_stats")
    if cap is not None:
        cap.check(t, "cdawg_stats")
    return summarize_repeats(t).cdawg


def summarize_repeats(t, index: Optional[SuffixIndex] = None) -> RepeatSummary:
    """Maximal-repeat and copy-class counts in (near) linear time."""
    t = as_text(t)
    index = index or SuffixIndex(t.data)
    count = 0
    right_total = 0
    classes = 0
    below_six = 0
    by_exp = defaultdict(int)
    p = t.padded
    for node in _repeat_nodes(t, index):
        count += 1
        right_total += len(node.children)
        k = node_pair_classes(node)
        if not k:
            continue
        classes += k
        start = int(index.sa[node.lb])
        e = Fraction(node.depth, min_period(p[start : start + node.depth]))
        by_exp[e] += k
        if e < 6:
            below_six += k
    root = len(set(t.data)) + 1
    return RepeatSummary(
        CdawgStats(count, right_total, root),
        classes,
        below_six,
        tuple(sorted(by_exp.items())),
    )
