"""Multiline process, the projection to TASEP configurations, and carrier dynamics.

Public site arguments (``k`` in :func:`t_step`, :func:`T_k`) are 1-based.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

from .combi_r import r_apply
from .words import Word, check_basic, config_text, enumerate_B, levels_from_multiplicity, multiline_size

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"sector too large: {what} has {size} elements, budget is {budget}")
        self.size = size
        self.budget = budget


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("TASEP_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class MultilineState:
    rows: tuple[Word, ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a multiline state needs at least one row")
        L = len(self.rows[0])
        if any(len(r) != L for r in self.rows):
            raise ValueError("rows must share their length")
        w = [r.weight for r in self.rows]
        if not (0 < w[0] and w[-1] < L and all(a < b for a, b in zip(w, w[1:]))):
            raise ValueError(f"row weights {w} must increase strictly inside (0, L)")

    @classmethod
    def parse(cls, texts: Iterable[str]) -> "MultilineState":
        return cls(tuple(Word.parse(t) for t in texts))

    @property
    def L(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __str__(self):
        return " (x) ".join(map(str, self.rows))


@dataclass
class SteadyVector:
    sector: tuple[int, ...]
    weights: dict[tuple[int, ...], int]
    method: str = ""

    def normalized(self) -> "SteadyVector":
        """Divide by the gcd so the weights are coprime integers."""
        g = 0
        for v in self.weights.values():
            g = gcd(g, v)
        if g in (0, 1):
            return self
        return SteadyVector(self.sector, {k: v // g for k, v in self.weights.items()}, self.method)

    def total(self) -> int:
        return sum(self.weights.values())

    def as_json(self) -> dict:
        return {
            "sector": list(self.sector),
            "method": self.method,
            "weights": {config_text(k): v for k, v in sorted(self.weights.items())},
        }


@lru_cache(maxsize=1 << 18)
def _r(i: Word, j: Word) -> tuple[Word, Word]:
    return r_apply(i, j)


def t_step(x: Word, k: int) -> tuple[int, Word]:
    """Pass site ``k`` (1-based) through ``x``: ``k' = k + x_k - 1`` and sort the pair at ``(k, k+1)``."""
    L = len(x)
    p = (k - 1) % L
    p1 = (p + 1) % L
    bits = list(x.bits)
    lo, hi = min(bits[p], bits[p1]), max(bits[p], bits[p1])
    bits[p], bits[p1] = lo, hi
    k_new = (k + x.bits[p] - 2) % L + 1
    return k_new, Word(tuple(bits))


def T_full(s: MultilineState, k: int) -> tuple[int, MultilineState]:
    rows = list(s.rows)
    for idx in range(len(rows) - 1, -1, -1):
        k, rows[idx] = t_step(rows[idx], k)
    return k, MultilineState(tuple(rows))


def T_k(s: MultilineState, k: int) -> MultilineState:
    return T_full(s, k)[1]


def pi_j(s: MultilineState | Sequence[Word], j: int) -> Word:
    """Row ``j`` (1-based) pushed through rows ``j+1..n`` by combinatorial R."""
    rows = s.rows if isinstance(s, MultilineState) else tuple(s)
    x = rows[j - 1]
    for other in rows[j:]:
        _, x = _r(x, other)
    return x


def pi_chain(s: MultilineState | Sequence[Word]) -> tuple[Word, ...]:
    rows = s.rows if isinstance(s, MultilineState) else tuple(s)
    return tuple(pi_j(rows, j) for j in range(1, len(rows) + 1))


def pi(s: MultilineState | Sequence[Word]) -> tuple[int, ...]:
    """The Ferrari-Martin projection: the integer sum of ``pi_1(s), ..., pi_n(s)``."""
    return tuple(map(sum, zip(*(w.bits for w in pi_chain(s)))))


def enumerate_multiline(m: Sequence[int], budget: int | None = None):
    m = check_basic(m)
    size = multiline_size(m)
    budget = enumeration_budget(budget)
    if size > budget:
        raise BudgetExceeded(f"multiline set of sector {m}", size, budget)
    L = sum(m)
    rows = [list(enumerate_B(l, L)) for l in levels_from_multiplicity(m)]
    for combo in itertools.product(*rows):
        yield combo


@lru_cache(maxsize=64)
def _preimages(m: tuple[int, ...], budget: int) -> dict[tuple[int, ...], tuple[tuple[Word, ...], ...]]:
    out: dict[tuple[int, ...], list] = {}
    for rows in enumerate_multiline(m, budget):
        out.setdefault(pi(rows), []).append(rows)
    return {k: tuple(v) for k, v in out.items()}


def preimages(m: Sequence[int], budget: int | None = None):
    """``sigma -> pi^{-1}(sigma)`` for the whole sector (memoized)."""
    return _preimages(check_basic(m), enumeration_budget(budget))


def fm_steady(m: Sequence[int], budget: int | None = None) -> SteadyVector:
    """Steady state as the number of multiline states projecting onto each configuration."""
    m = check_basic(m)
    counts = Counter(pi(rows) for rows in enumerate_multiline(m, budget))
    return SteadyVector(m, dict(counts), "fm")


# --- carriers ---------------------------------------------------------------


def carrier_evolve(s: MultilineState | Sequence[Word], u: Word) -> tuple[Word, MultilineState]:
    """Send carrier ``u`` leftward through ``b_n, ..., b_1``; returns ``(u', s')``."""
    rows = list(s.rows if isinstance(s, MultilineState) else s)
    for idx in range(len(rows) - 1, -1, -1):
        u, rows[idx] = _r(rows[idx], u)
    return u, MultilineState(tuple(rows))


def carrier_inverse(u: Word, s: MultilineState | Sequence[Word]) -> tuple[MultilineState, Word]:
    """Inverse of :func:`carrier_evolve`: from ``u' (x) s'`` recover ``s (x) u``."""
    rows = list(s.rows if isinstance(s, MultilineState) else s)
    for idx in range(len(rows)):
        rows[idx], u = _r(u, rows[idx])
    return MultilineState(tuple(rows)), u


def conjecture_check(m: Sequence[int], r: int, budget: int | None = None) -> dict:
    """Single-image test for ``pi . T_u . pi^{-1}`` and stationarity of the induced chain."""
    m = check_basic(m)
    L = sum(m)
    if not 1 <= r < L:
        raise ValueError(f"carrier weight r={r} must lie in [1, {L - 1}]")
    pre = preimages(m, budget)
    carriers = list(enumerate_B(r, L))
    failures = []
    tau: dict[tuple[Word, tuple[int, ...]], tuple[int, ...]] = {}
    for sigma in sorted(pre):
        for u in carriers:
            images = {pi(carrier_evolve(rows, u)[1]) for rows in pre[sigma]}
            if len(images) != 1:
                failures.append(
                    {"sigma": config_text(sigma), "u": str(u), "images": sorted(map(config_text, images))}
                )
            else:
                tau[(u, sigma)] = images.pop()
    report = {
        "sector": list(m),
        "r": r,
        "configs": len(pre),
        "carriers": len(carriers),
        "singleton": not failures,
        "failures": failures[:5],
        "stationary": None,
    }
    if not failures:
        weights = {sigma: len(v) for sigma, v in pre.items()}
        inflow: Counter = Counter()
        for (u, sigma), target in tau.items():
            inflow[target] += weights[sigma]
        report["stationary"] = all(inflow[s] == len(carriers) * w for s, w in weights.items())
    return report


def mass(m: Sequence[int]) -> int:
    L = sum(m)
    out = 1
    for l in levels_from_multiplicity(m):
        out *= comb(L, l)
    return out
