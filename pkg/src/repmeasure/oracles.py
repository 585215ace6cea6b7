"""Definitional brute-force oracles.

Each function here follows the textbook definition directly, shares no code
with the efficient paths it is used to check, and is only meant for short
strings.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .text import as_text

SENT = b"\x00"


def rotation_order(s) -> tuple:
    """Sort all rotations ``S[p+1..]$ S[1..p]`` of ``S$`` explicitly."""
    s = as_text(s).data + SENT
    n = len(s)
    rotations = sorted((s[p:] + s[:p], p) for p in range(n))
    # rotation starting at 0-based offset p corresponds to pi = p
    return tuple(p for _, p in rotations)


def bwt(s) -> bytes:
    data = as_text(s).data + SENT
    n = len(data)
    rotations = sorted(data[p:] + data[:p] for p in range(n))
    return bytes(r[-1] for r in rotations)


def cyclic_bwt(s) -> bytes:
    data = as_text(s).data
    rotations = sorted((data[p:] + data[:p], p) for p in range(len(data)))
    return bytes(r[-1] for r, _ in rotations)


def run_count(seq: bytes) -> int:
    return sum(1 for k in range(len(seq)) if k == 0 or seq[k] != seq[k - 1])


def lz77(s) -> list:
    """Factor contents, testing every candidate length by substring search."""
    data = as_text(s).data
    out = []
    pos = 0
    while pos < len(data):
        best = 0
        for length in range(1, len(data) - pos + 1):
            factor = data[pos : pos + length]
            prefix = data[: pos + length]
            count = sum(1 for q in range(len(prefix) - length + 1) if prefix[q : q + length] == factor)
            if count >= 2:
                best = length
        if best == 0:
            # the symbol is new, otherwise length 1 would already repeat
            assert data[pos] not in data[:pos]
            best = 1
        out.append(data[pos : pos + best])
        pos += best
    return out


def maximal_pairs(s) -> set:
    """All ``(n, m, l)`` with ``n < m`` checked against the three conditions."""
    data = as_text(s).data
    S = SENT + data + SENT
    size = len(data)
    found = set()
    for n in range(1, size + 1):
        for m in range(n + 1, size + 1):
            for l in range(1, size - m + 2):
                if S[n : n + l] != S[m : m + l]:
                    break
                if S[n - 1] != S[m - 1] and S[n + l] != S[m + l]:
                    found.add((n, m, l))
    return found


def copy_key(s, n, m, l):
    S = SENT + as_text(s).data + SENT
    return tuple(sorted((S[n - 1 : n + l + 1], S[m - 1 : m + l + 1])))


def maximal_repeats(s) -> dict:
    """Map content -> (occurrences, left symbols, right symbols) for substrings
    occurring at least twice whose every one-symbol extension occurs less
    often within ``S``."""
    data = as_text(s).data
    S = SENT + data + SENT
    size = len(data)
    occ = {}
    for i in range(1, size + 1):
        for j in range(i, size + 1):
            occ.setdefault(S[i : j + 1], []).append(i)
    out = {}
    for body, starts in occ.items():
        if len(starts) < 2:
            continue
        count = len(starts)
        extended = [occ.get(c + body, []) for c in (bytes([x]) for x in set(data))]
        extended += [occ.get(body + c, []) for c in (bytes([x]) for x in set(data))]
        if all(len(e) < count for e in extended):
            left = {S[i - 1] for i in starts}
            right = {S[i + len(body)] for i in starts}
            out[body] = (count, left, right)
    return out


def min_period(w: bytes) -> int:
    for d in range(1, len(w) + 1):
        if all(w[k] == w[k + d] for k in range(len(w) - d)):
            return d
    raise ValueError("empty word")


def exponent(w: bytes) -> Fraction:
    return Fraction(len(w), min_period(w)) if w else Fraction(0)


def max_exponent(s) -> Fraction:
    data = as_text(s).data
    return max(exponent(data[i:j]) for i in range(len(data)) for j in range(i + 1, len(data) + 1))


def extension(s, l, r, delta):
    """Maximal ``delta``-periodic extension by growing one symbol at a time."""
    data = as_text(s).data
    S = SENT + data + SENT

    def periodic(a, b):
        w = S[a : b + 1]
        return all(w[k] == w[k + delta] for k in range(len(w) - delta))

    while l - 1 >= 1 and periodic(l - 1, r):
        l -= 1
    while r + 1 <= len(data) and periodic(l, r + 1):
        r += 1
    return l, r, S[l - 1 : r + 2]


def crossing_extension_keys(s, i) -> set:
    """Content keys of padded maximal periodic extensions of fourth powers
    whose padded interval ``(l-1, r+1)`` satisfies ``l-1 < i <= r+1``."""
    data = as_text(s).data
    keys = set()
    for a in range(1, len(data) + 1):
        for b in range(a, len(data) + 1):
            w = data[a - 1 : b]
            d = min_period(w)
            if len(w) >= 4 * d:
                lo, hi, key = extension(s, a, b, d)
                if lo - 1 < i <= hi + 1:
                    keys.add(key)
    return keys


def strings(alphabet: bytes, max_length: int, min_length: int = 1):
    """Every string over ``alphabet`` with length in the given range."""
    for length in range(min_length, max_length + 1):
        for combo in product(alphabet, repeat=length):
            yield bytes(combo)
