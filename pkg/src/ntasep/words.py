"""Crystal words, TASEP configurations and the bijection between them.

A word of ``B^l`` is a 0/1 tuple of length ``L`` with exactly ``l`` ones.
A configuration is a tuple over ``{0, ..., n}``. Sites are 0-based in code
and 1-based in anything printed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator, Sequence


class SectorError(ValueError):
    """Raised for multiplicities outside the basic sectors."""


class ChainError(ValueError):
    """Raised when a tuple of words is not a weakly increasing chain."""


@dataclass(frozen=True)
class Word:
    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"word entries must be 0 or 1: {self.bits!r}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a 0/1 word: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_sites(cls, sites, L: int) -> "Word":
        bits = [0] * L
        for p in sites:
            bits[p] = 1
        return cls(tuple(bits))

    @property
    def L(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def sites(self) -> list[int]:
        return [p for p, b in enumerate(self.bits) if b]

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, k):
        return self.bits[k]

    def __le__(self, other):
        # componentwise partial order, not the lexicographic one
        if not isinstance(other, Word):
            return NotImplemented
        return len(self) == len(other) and all(x <= y for x, y in zip(self.bits, other.bits))

    def __str__(self):
        return "".join(map(str, self.bits))

    def __repr__(self):
        return f"Word('{self}')"


@dataclass(frozen=True)
class Config:
    entries: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("species count n must be at least 1")
        if any(not 0 <= s <= self.n for s in self.entries):
            raise ValueError(f"entries of {self.entries!r} must lie in [0, {self.n}]")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Config":
        entries = tuple(int(c) for c in text.replace(" ", "").split(","))
        return cls(entries, max(entries) if n is None else n)

    @property
    def L(self) -> int:
        return len(self.entries)

    def multiplicity(self) -> tuple[int, ...]:
        return tuple(self.entries.count(a) for a in range(self.n + 1))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self):
        return ",".join(map(str, self.entries))


def config_text(sigma: Sequence[int]) -> str:
    return ",".join(map(str, sigma))


def check_basic(m: Sequence[int]) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if len(m) < 2:
        raise SectorError("a multiplicity needs at least two entries (m_0, m_1)")
    if any(x < 0 for x in m):
        raise SectorError(f"negative multiplicity {m}")
    if any(x == 0 for x in m):
        raise SectorError(f"non-basic sector {m}: every species must occur")
    return m


def levels_from_multiplicity(m: Sequence[int]) -> tuple[int, ...]:
    """``l_i = m_{n-i+1} + ... + m_n`` for ``i = 1..n``."""
    m = check_basic(m)
    n = len(m) - 1
    return tuple(sum(m[n - i + 1:]) for i in range(1, n + 1))


def multiplicity_from_levels(levels: Sequence[int], L: int) -> tuple[int, ...]:
    ext = (0, *levels, L)
    if any(b <= a for a, b in zip(ext, ext[1:])):
        raise SectorError(f"levels {tuple(levels)} are not strictly increasing in (0, {L})")
    n = len(levels)
    # m_k = l_{n-k+1} - l_{n-k}
    return tuple(ext[n - k + 1] - ext[n - k] for k in range(n + 1))


def phi(sigma: Config) -> tuple[Word, ...]:
    """The chain ``(phi_1, ..., phi_n)`` with ``phi_j = [sigma_k >= n+1-j]_k``."""
    check_basic(sigma.multiplicity())
    n = sigma.n
    return tuple(
        Word(tuple(int(s >= n + 1 - j) for s in sigma.entries)) for j in range(1, n + 1)
    )


def phi_inv(words: Sequence[Word]) -> Config:
    words = tuple(words)
    if not words:
        raise ChainError("empty chain")
    L = len(words[0])
    if any(len(w) != L for w in words):
        raise ChainError("words of a chain must share their length")
    weights = [w.weight for w in words]
    if not all(0 < a < b for a, b in zip(weights, weights[1:])) or not 0 < weights[0] or not weights[-1] < L:
        raise ChainError(f"weights {weights} are not strictly increasing in (0, L)")
    for a, b in zip(words, words[1:]):
        if not a <= b:
            raise ChainError(f"not in B_+: {a} is not below {b}")
    return Config(tuple(map(sum, zip(*(w.bits for w in words)))), len(words))


def enumerate_B(l: int, L: int) -> Iterator[Word]:
    """All words of weight ``l`` in ascending lexicographic order (site 1 most significant)."""
    if not 0 <= l <= L:
        return
    # zero-sets in lexicographic order give ascending bit strings
    for zeros in itertools.combinations(range(L), L - l):
        yield Word.from_sites(sorted(set(range(L)) - set(zeros)), L)


def enumerate_sector(m: Sequence[int]) -> Iterator[Config]:
    """Every configuration with multiplicity ``m``, in lexicographic order."""
    m = tuple(m)
    n = len(m) - 1
    L = sum(m)
    counts = list(m)
    current = [0] * L

    def rec(pos):
        if pos == L:
            yield Config(tuple(current), n)
            return
        for a in range(n + 1):
            if counts[a]:
                counts[a] -= 1
                current[pos] = a
                yield from rec(pos + 1)
                counts[a] += 1

    yield from rec(0)


def sector_size(m: Sequence[int]) -> int:
    return factorial(sum(m)) // prod(factorial(x) for x in m)


def multiline_size(m: Sequence[int]) -> int:
    L = sum(m)
    return prod(comb(L, l) for l in levels_from_multiplicity(m))


def basic_sectors(L: int, n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``L`` into ``n + 1`` positive parts, lexicographic."""
    for cuts in itertools.combinations(range(1, L), n):
        edges = (0, *cuts, L)
        yield tuple(b - a for a, b in zip(edges, edges[1:]))
