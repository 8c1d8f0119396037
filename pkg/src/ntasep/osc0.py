"""The q = 0 oscillator algebra in PBW normal form.

Generators ``a+``, ``a-``, ``k`` obey

    k k = k,   k a+ = 0,   a- k = 0,   a- a+ = 1,   a+ a- = 1 - k

and act on the Fock space by ``a+|m> = |m+1>``, ``a-|m> = |m-1>`` (zero on
``|0>``) and ``k|m> = delta_{m,0}|m>``.  A basis is ``1``, ``(a+)^r``,
``(a-)^r`` and ``(a+)^s k (a-)^t``; a basis monomial is stored as the triple
``(s, f, t)`` meaning ``(a+)^s k^f (a-)^t`` where ``f`` is 0 or 1 and
``s * t == 0`` whenever ``f == 0``.

Closed product rules used by :func:`mono_mul`:

* ``(a-)^t (a+)^s`` is ``(a+)^(s-t)`` if ``s >= t`` else ``(a-)^(t-s)``;
* ``k (a+)^d = 0`` and ``(a-)^d k = 0`` for ``d >= 1``, so in particular
  ``k (a-)^t k = 0`` for ``t >= 1``;
* ``(a+)^S (a-)^T = (a+)^(S-r) (a-)^(T-r) - sum_{j=1..r} (a+)^(S-j) k (a-)^(T-j)``
  with ``r = min(S, T)``, which follows from ``a+ a- = 1 - k`` by induction.
"""
from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

Mono = tuple[int, int, int]

UNIT: Mono = (0, 0, 0)
K: Mono = (0, 1, 0)
AP: Mono = (1, 0, 0)
AM: Mono = (0, 0, 1)


class DivergentTrace(ArithmeticError):
    """The trace of an element with a nonzero unit coefficient diverges."""


def _plain(S: int, T: int) -> list[tuple[int, Mono]]:
    """Normal form of ``(a+)^S (a-)^T`` (no k in between)."""
    r = min(S, T)
    out = [(1, (S - r, 0, T - r))]
    out.extend((-1, (S - j, 1, T - j)) for j in range(1, r + 1))
    return out


def mono_mul(x: Mono, y: Mono) -> list[tuple[int, Mono]]:
    """Product of two basis monomials as a list of ``(coefficient, monomial)``."""
    s1, f1, t1 = x
    s2, f2, t2 = y
    d = s2 - t1
    if d > 0:
        if f1:
            return []
        if f2:
            return [(1, (s1 + d, 1, t2))]
        return _plain(s1 + d, t2)
    if d < 0:
        if f2:
            return []
        if f1:
            return [(1, (s1, 1, t2 - d))]
        return _plain(s1, t2 - d)
    if f1 or f2:
        return [(1, (s1, 1, t2))]
    return _plain(s1, t2)


def mono_trace(x: Mono) -> int:
    s, f, t = x
    if not f:
        if s == 0 and t == 0:
            raise DivergentTrace("Tr(1) diverges")
        return 0
    return int(s == t)


def mono_str(x: Mono) -> str:
    s, f, t = x
    if x == UNIT:
        return "1"
    parts = []
    if s:
        parts.append("A+" if s == 1 else f"A+^{s}")
    if f:
        parts.append("K")
    if t:
        parts.append("A-" if t == 1 else f"A-^{t}")
    return " ".join(parts)


def mono_fock(x: Mono, cutoff: int) -> np.ndarray:
    s, f, t = x
    N = cutoff + 1
    mat = np.zeros((N, N), dtype=object)
    for m in range(N):
        if m < t:
            continue
        mid = m - t
        if f and mid != 0:
            continue
        out = mid + s
        if out < N:
            mat[out, m] = 1
    return mat


class OscElem:
    """Integer linear combination of PBW monomials of the q = 0 oscillator algebra."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def mono(cls, m: Mono, coeff: int = 1) -> "OscElem":
        return cls({m: coeff})

    @classmethod
    def scalar(cls, c: int) -> "OscElem":
        return cls({UNIT: c})

    @classmethod
    def a_plus(cls, r: int = 1) -> "OscElem":
        return cls({(r, 0, 0): 1})

    @classmethod
    def a_minus(cls, r: int = 1) -> "OscElem":
        return cls({(0, 0, r): 1})

    @classmethod
    def k(cls) -> "OscElem":
        return cls({K: 1})

    @classmethod
    def sandwich(cls, s: int, t: int) -> "OscElem":
        """``(a+)^s k (a-)^t``."""
        return cls({(s, 1, t): 1})

    @property
    def unit(self) -> int:
        return self.terms.get(UNIT, 0)

    @property
    def plus(self) -> dict[int, int]:
        return {s: c for (s, f, t), c in self.terms.items() if not f and s}

    @property
    def minus(self) -> dict[int, int]:
        return {t: c for (s, f, t), c in self.terms.items() if not f and t}

    @property
    def mid(self) -> dict[tuple[int, int], int]:
        return {(s, t): c for (s, f, t), c in self.terms.items() if f}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = OscElem.scalar(other)
        return isinstance(other, OscElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = OscElem.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return OscElem(out)

    __radd__ = __add__

    def __neg__(self):
        return OscElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return OscElem({m: c * other for m, c in self.terms.items()})
        return osc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        out = OscElem.scalar(1)
        for _ in range(e):
            out = out * self
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            parts.append(f"{c}*{mono_str(m)}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def osc_mul(x: OscElem, y: OscElem) -> OscElem:
    out: dict[Mono, int] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            for c, m in mono_mul(m1, m2):
                out[m] = out.get(m, 0) + c * c1 * c2
    return OscElem(out)


def osc_product(factors: Iterable[OscElem]) -> OscElem:
    """Left-to-right product; stops as soon as the running product vanishes."""
    out = OscElem.scalar(1)
    for f in factors:
        out = osc_mul(out, f)
        if not out:
            break
    return out


def osc_trace(x: OscElem) -> int:
    """``sum_m <m|x|m>``; defined only when the unit coefficient vanishes."""
    if x.unit:
        raise DivergentTrace(f"Tr diverges: unit coefficient {x.unit}")
    return sum(c for (s, f, t), c in x.terms.items() if f and s == t)


def fock_matrix(x: OscElem, cutoff: int) -> np.ndarray:
    """Matrix of ``x`` on ``span{|0>, ..., |cutoff>}``, truncating ``a+|cutoff>`` to 0."""
    N = cutoff + 1
    mat = np.zeros((N, N), dtype=object)
    for m, c in x.terms.items():
        mat = mat + c * mono_fock(m, cutoff)
    return mat
