"""Burrows-Wheeler transform of ``S$`` and its run decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .suffix import cyclic_order, suffix_array
from .text import SENTINEL, Text, as_text, require_length


@dataclass(frozen=True)
class RotationOrder:
    """Sorted order of the rotations ``S[pi+1..|S|+1] S[1..pi]`` of ``S$``.

    ``pi[k]`` is ``pi_{k+1}`` in 1-based notation; the tuple is 0-based but every
    value is a text offset in ``0..|S|``.
    """

    pi: Tuple[int, ...]

    def __len__(self):
        return len(self.pi)


@dataclass(frozen=True)
class Run:
    symbol: int
    start: int
    length: int


@dataclass(frozen=True)
class RunProfile:
    bwt: bytes
    runs: Tuple[Run, ...]

    @property
    def r(self) -> int:
        return len(self.runs)


def rotation_order(t, method: str = "auto") -> RotationOrder:
    """Rotation order of ``S$`` via suffix sorting.

    With a unique smallest sentinel, the rotation starting at offset ``p`` of
    ``S$`` sorts exactly like the suffix starting there, so ``pi = sa - 1``.
    """
    t = as_text(t)
    require_length(t, 1, "rotation_order")
    sa = suffix_array(t.data, method)
    return RotationOrder(tuple(int(p) - 1 for p in sa))


def runs_of(seq: bytes) -> Tuple[Run, ...]:
    """Maximal blocks of equal symbols, with 1-based start indices."""
    runs: List[Run] = []
    start = 0
    for k in range(1, len(seq) + 1):
        if k == len(seq) or seq[k] != seq[start]:
            runs.append(Run(seq[start], start + 1, k - start))
            start = k
    return tuple(runs)


def bwt(t, order: RotationOrder = None) -> RunProfile:
    t = as_text(t)
    if order is None:
        order = rotation_order(t)
    p = t.padded
    seq = bytes(p[k] for k in order.pi)
    return RunProfile(seq, runs_of(seq))


def cyclic_bwt(t) -> RunProfile:
    """BWT of the ``|S|`` cyclic rotations of ``S`` itself (no sentinel).

    Ties between identical rotations are broken by ascending start index.
    """
    t = as_text(t)
    require_length(t, 1, "cyclic_bwt")
    data = t.data
    order = cyclic_order(data)
    seq = bytes(data[int(k) - 1] for k in order)
    return RunProfile(seq, runs_of(seq))


def inverse_bwt(seq: bytes) -> bytes:
    """Recover ``S$`` (sentinel as 0x00) from a sentinel BWT via LF-mapping."""
    n = len(seq)
    arr = np.frombuffer(bytes(seq), dtype=np.uint8)
    # stable sort gives the first column; lf[row] is the row of the rotation
    # one step to the left
    first = np.argsort(arr, kind="stable")
    lf = np.empty(n, dtype=np.int64)
    lf[first] = np.arange(n)
    row = 0
    out = bytearray(n)
    for k in range(n - 1, -1, -1):
        out[k] = seq[row]
        row = int(lf[row])
    # out is now the rotation that begins right after the sentinel
    return bytes(out[1:]) + bytes([SENTINEL])


def run_count(t) -> int:
    return bwt(t).r
