"""Deterministic string families.

Fibonacci strings use ``F1 = "b"``, ``F2 = "a"``, ``Fn = F(n-1) F(n-2)``, so
``F5 = "abaab"``.  Under this convention the cyclic BWT of ``Fn`` is
``b^f(n-2) a^f(n-1)`` with ``f`` the Fibonacci numbers (``f1 = f2 = 1``).
Random strings come from numpy's PCG64 generator, seeded explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import ParameterError
from .text import Text

FAMILIES = ("fibonacci", "thue-morse", "unary-power", "worked-example", "random")
RANDOM_MAX_LENGTH = 10**6
EXAMPLE = "b" + "a" * 10 + "b" + "a" * 20 + "b"


@dataclass(frozen=True)
class GeneratorSpec:
    """``parameter`` is n for fibonacci, the length for thue-morse and
    unary-power, and the alphabet size for random (whose length is
    ``length``)."""

    family: str
    parameter: int = 1
    seed: int = 0
    length: Optional[int] = None

    @property
    def text_id(self) -> str:
        if self.family == "worked-example":
            return "worked-example"
        if self.family == "random":
            return f"random-k{self.parameter}-n{self.length}-seed{self.seed}"
        return f"{self.family}-{self.parameter}"


def fibonacci_word(n: int) -> bytes:
    a, b = b"b", b"a"  # F1, F2
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, b + a
    return b


def fibonacci_number(n: int) -> int:
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def thue_morse(length: int) -> bytes:
    # the k-th symbol is the parity of the number of ones in k
    return bytes(b"ab"[bin(k).count("1") & 1] for k in range(length))


def random_word(alphabet_size: int, length: int, seed: int) -> bytes:
    rng = np.random.Generator(np.random.PCG64(seed))
    symbols = rng.integers(0, alphabet_size, size=length)
    return (symbols.astype(np.uint8) + ord("a")).tobytes()


def generate(spec: GeneratorSpec) -> Text:
    family, k = spec.family, spec.parameter
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "worked-example":
        return Text(EXAMPLE)
    if k < 1:
        raise ParameterError("parameter must be at least 1")
    if family == "fibonacci":
        if k > 40:
            raise ParameterError("fibonacci index above 40 is too long")
        return Text(fibonacci_word(k))
    if family == "thue-morse":
        return Text(thue_morse(k))
    if family == "unary-power":
        return Text(b"a" * k)
    if not 1 <= k <= 26:
        raise ParameterError("random alphabet size must be in 1..26")
    if spec.length is None or not 1 <= spec.length <= RANDOM_MAX_LENGTH:
        raise ParameterError(f"random length must be in 1..{RANDOM_MAX_LENGTH}")
    if not 0 <= spec.seed < 2**64:
        raise ParameterError("seed must be a 64-bit unsigned integer")
    return Text(random_word(k, spec.length, spec.seed))


def default_specs(random_count: int = 200, random_max_length: int = 2000) -> List[GeneratorSpec]:
    specs = [GeneratorSpec("fibonacci", n) for n in range(3, 21)]
    specs += [GeneratorSpec("thue-morse", 2**e) for e in range(1, 13)]
    specs += [GeneratorSpec("thue-morse", n) for n in (3, 5, 11, 100, 1000)]
    specs += [GeneratorSpec("unary-power", 2**e) for e in range(1, 11)]
    specs += [GeneratorSpec("unary-power", n) for n in (3, 5, 7, 100, 1000)]
    specs.append(GeneratorSpec("worked-example"))
    # lengths and alphabet sizes are drawn from a fixed master seed
    master = np.random.Generator(np.random.PCG64(20240229))
    for seed in range(random_count):
        k = int(master.integers(2, 6))
        n = int(master.integers(2, random_max_length + 1))
        specs.append(GeneratorSpec("random", k, seed, n))
    return specs


def default_corpus(**kwargs) -> List[Tuple[str, Text]]:
    """``(text_id, text)`` for every default generator spec."""
    return [(s.text_id, generate(s)) for s in default_specs(**kwargs)]
