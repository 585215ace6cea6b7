"""Subject strings with virtual sentinels at both ends.

A :class:`Text` holds the raw bytes of ``S`` and exposes 1-based positions
``1..|S|``.  Positions ``0`` and ``|S|+1`` address the sentinel, which is
represented by the byte value ``0`` and therefore sorts before every symbol.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import RangeError, SizeError

SENTINEL = 0
SENTINEL_BYTE = b"\x00"


class Text:
    """Immutable byte string with sentinel-padded 1-based access."""

    __slots__ = ("_data", "_padded")

    def __init__(self, data: Union[bytes, bytearray, str, "Text"]):
        if isinstance(data, Text):
            data = data.data
        if isinstance(data, str):
            data = data.encode("utf-8")
        data = bytes(data)
        if SENTINEL_BYTE in data:
            raise ValueError("byte 0x00 is reserved for the sentinel")
        self._data = data
        self._padded = SENTINEL_BYTE + data + SENTINEL_BYTE

    @property
    def data(self) -> bytes:
        return self._data

    @property
    def padded(self) -> bytes:
        """``$S$`` as bytes, so ``padded[i] == char_at(i)``."""
        return self._padded

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        return isinstance(other, Text) and other._data == self._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"Text({self._data!r})"

    def __str__(self):
        return self._data.decode("latin-1")

    @property
    def alphabet(self) -> frozenset:
        """Distinct symbols of ``S`` (sentinel excluded)."""
        return frozenset(self._data)

    def char_at(self, i: int) -> int:
        return char_at(self, i)

    def substring(self, i: int, j: int) -> bytes:
        return substring(self, i, j)


def as_text(t) -> Text:
    return t if isinstance(t, Text) else Text(t)


def char_at(t: Text, i: int) -> int:
    """Return ``S[i]``; the sentinel (0) for ``i == 0`` or ``i == |S|+1``."""
    if not 0 <= i <= len(t) + 1:
        raise RangeError(f"position {i} outside [0, {len(t) + 1}]")
    return t.padded[i]


def substring(t: Text, i: int, j: int) -> bytes:
    """Return ``S[i..j]`` (inclusive); empty when ``i > j``."""
    n = len(t)
    if i > j:
        if not (0 <= i <= n + 2 and 0 <= j <= n + 1):
            raise RangeError(f"substring bounds ({i}, {j}) out of range")
        return b""
    if i < 0 or j > n + 1:
        raise RangeError(f"substring bounds ({i}, {j}) outside [0, {n + 1}]")
    return t.padded[i : j + 1]


def lce(t: Text, n: int, m: int) -> int:
    """Longest common extension of positions ``n`` and ``m``.

    Comparison runs into the trailing sentinel, so for ``n != m`` the result
    is finite and the mismatch at offset ``l`` always exists.
    """
    size = len(t)
    if not (1 <= n <= size and 1 <= m <= size):
        raise RangeError(f"lce positions ({n}, {m}) outside [1, {size}]")
    if n == m:
        return size - n + 1
    p = t.padded
    k = 0
    while p[n + k] == p[m + k] and p[n + k] != SENTINEL:
        k += 1
    return k


class Context(NamedTuple):
    """One symbol of context on each side of a positioned substring."""

    left: int
    body: bytes
    right: int

    @classmethod
    def at(cls, t: Text, n: int, length: int) -> "Context":
        return cls(char_at(t, n - 1), substring(t, n, n + length - 1), char_at(t, n + length))

    def key(self) -> bytes:
        return bytes([self.left]) + self.body + bytes([self.right])


def render(data: bytes, sentinel: str = "$") -> str:
    """Human-readable form of a byte string that may carry sentinels."""
    return data.decode("latin-1").replace("\x00", sentinel)


def read_text(source: str = "-", strip_newline: bool = False) -> Text:
    """Load a text from a file path, or from standard input for ``-``."""
    if source == "-":
        raw = sys.stdin.buffer.read()
    else:
        with open(source, "rb") as fh:
            raw = fh.read()
    if strip_newline and raw.endswith(b"\n"):
        raw = raw[:-1]
    return Text(raw)


def require_length(t: Text, minimum: int = 1, stage: str = "analysis") -> None:
    if len(t) < minimum:
        raise SizeError(f"{stage} needs |S| >= {minimum}, got {len(t)}", stage=stage)


@dataclass(frozen=True)
class Cap:
    """Size limit for stages whose cost or output is superlinear."""

    limit: int
    flag: str

    def check(self, t: Text, stage: str) -> None:
        if len(t) > self.limit:
            raise SizeError(
                f"{stage}: |S| = {len(t)} exceeds the cap {self.limit} (raise it with {self.flag})",
                stage=stage,
                cap=self.limit,
            )


EXHAUSTIVE_CAP = Cap(4096, "--cap")
EXPONENT_CAP = Cap(65536, "--exponent-cap")
