"""Corner transfer matrix operators X_i, hat operators, and the trace formula.

The staircase for ``n`` species has lines ``1..n`` numbered from the top.
Line ``j`` enters from the left, runs right across the vertical parts of
lines ``n, n-1, ..., j+1`` (in that order), then turns upward at its corner
and leaves through the top.  The corner of line ``j`` carries the fixed value
``1`` when ``j > n - i`` and ``0`` otherwise, so ``X_i`` has ``i`` ones on the
bottom corners.  Each crossing is a q = 0 five-vertex weight
``L^{a,b}_{i,j}`` with ``i`` entering from the left, ``j`` from below, ``a``
leaving right and ``b`` leaving up.

There is one oscillator copy per crossing, ``K = n(n-1)/2`` in all.  Two
copy orders are provided:

* ``"row"``: row by row from the top, left to right inside a row;
* ``"column"``: column by column from the left, top to bottom inside a column.

The trace is the same for both orders; only the printed form differs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .markov import h_local
from .multiline import BudgetExceeded, SteadyVector, enumeration_budget
from .osc0 import AM, AP, K, UNIT, DivergentTrace, Mono, mono_fock, mono_mul, mono_str, mono_trace
from .words import check_basic, sector_size

ORDERS = ("row", "column")

# (i, j) -> [((a, b), weight)] for the q = 0 five-vertex model
_VERTEX: dict[tuple[int, int], list[tuple[tuple[int, int], Mono]]] = {
    (0, 0): [((0, 0), UNIT)],
    (1, 1): [((1, 1), UNIT)],
    (0, 1): [((0, 1), K), ((1, 0), AM)],
    (1, 0): [((0, 1), AP)],
}


def crossings(n: int, order: str = "row") -> list[tuple[int, int]]:
    """Crossings ``(row j, vertical line r)`` in copy order."""
    if order == "row":
        return [(j, r) for j in range(1, n + 1) for r in range(n, j, -1)]
    if order == "column":
        return [(j, r) for r in range(n, 1, -1) for j in range(1, r)]
    raise ValueError(f"unknown copy order {order!r}; expected one of {ORDERS}")


def corner_values(i: int, n: int) -> tuple[int, ...]:
    return tuple(1 if j > n - i else 0 for j in range(1, n + 1))


@dataclass
class CtmOperator:
    """Element of the ``K``-fold tensor power of the q = 0 algebra: ``{copies: coefficient}``."""

    n: int
    terms: dict[tuple[Mono, ...], int] = field(default_factory=dict)
    order: str = "row"

    @property
    def K(self) -> int:
        return self.n * (self.n - 1) // 2

    def __mul__(self, other: "CtmOperator") -> "CtmOperator":
        return CtmOperator(self.n, ctm_mul(self.terms, other.terms), self.order)

    def __add__(self, other: "CtmOperator") -> "CtmOperator":
        return CtmOperator(self.n, _add(self.terms, other.terms), self.order)

    def __sub__(self, other: "CtmOperator") -> "CtmOperator":
        return CtmOperator(self.n, _add(self.terms, {k: -c for k, c in other.terms.items()}), self.order)

    def scaled(self, c: int) -> "CtmOperator":
        return CtmOperator(self.n, {k: c * v for k, v in self.terms.items() if c * v}, self.order)

    def __eq__(self, other):
        return isinstance(other, CtmOperator) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def reordered(self, order: str) -> "CtmOperator":
        src = crossings(self.n, self.order)
        dst = crossings(self.n, order)
        perm = [src.index(v) for v in dst]
        return CtmOperator(self.n, {tuple(k[p] for p in perm): c for k, c in self.terms.items()}, order)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_sort_key):
            c = self.terms[key]
            body = " . ".join(mono_str(m) for m in key) if key else "1"
            parts.append(body if c == 1 else f"{c} * {body}")
        return " + ".join(parts).replace("+ -", "- ")


def _sort_key(key):
    return tuple(x for m in key for x in m)


def _add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=1 << 16)
def _mono_mul_cached(x: Mono, y: Mono) -> tuple[tuple[int, Mono], ...]:
    return tuple(mono_mul(x, y))


def ctm_mul(x: dict, y: dict) -> dict:
    out: dict[tuple[Mono, ...], int] = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            parts = []
            for mx, my in zip(kx, ky):
                p = _mono_mul_cached(mx, my)
                if not p:
                    break
                parts.append(p)
            else:
                for combo in itertools.product(*parts):
                    c = cx * cy
                    for coeff, _ in combo:
                        c *= coeff
                    key = tuple(m for _, m in combo)
                    out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c}


def configurations(i: int, n: int) -> Iterator[tuple[dict[tuple[int, int], Mono], tuple[int, ...]]]:
    """Every admissible five-vertex configuration for ``X_i``.

    Yields ``(weights, alpha)`` where ``weights`` maps each crossing to its
    monomial and ``alpha`` lists the top outputs from left to right.
    """
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    gamma = corner_values(i, n)
    # vertical value of line r just above the last row it crossed; starts at its corner
    def rec(j: int, vertical: dict[int, int], weights: dict):
        if j == 0:
            alpha = tuple(vertical[r] for r in range(n, 1, -1)) + (gamma[0],)
            yield dict(weights), alpha
            return
        if j == n:
            yield from rec(j - 1, vertical, weights)
            return
        for x in (0, 1):
            yield from row(j, n, x, vertical, weights)

    def row(j: int, r: int, h: int, vertical: dict[int, int], weights: dict):
        if r == j:
            if h == gamma[j - 1]:
                v2 = dict(vertical)
                v2[j] = gamma[j - 1]
                yield from rec(j - 1, v2, weights)
            return
        for (a, b), w in _VERTEX[(h, vertical[r])]:
            v2 = dict(vertical)
            v2[r] = b
            weights[(j, r)] = w
            yield from row(j, r - 1, a, v2, weights)
            del weights[(j, r)]

    start = {n: gamma[n - 1]}
    yield from rec(n, start, {})


@lru_cache(maxsize=None)
def _build(i: int, n: int, order: str, hat: bool) -> tuple[tuple[tuple[Mono, ...], int], ...]:
    cross = crossings(n, order)
    out: dict[tuple[Mono, ...], int] = {}
    for weights, alpha in configurations(i, n):
        c = sum(alpha) if hat else 1
        if c:
            key = tuple(weights[v] for v in cross)
            out[key] = out.get(key, 0) + c
    return tuple((k, c) for k, c in out.items() if c)


def build_X(i: int, n: int, order: str = "row") -> CtmOperator:
    return CtmOperator(n, dict(_build(i, n, order, False)), order)


def build_Xhat(i: int, n: int, order: str = "row") -> CtmOperator:
    """Same configurations as ``X_i``, each weighted by the sum of the top outputs."""
    return CtmOperator(n, dict(_build(i, n, order, True)), order)


# --- traces -----------------------------------------------------------------


def ctm_trace(terms: dict[tuple[Mono, ...], int]) -> int:
    """Trace over the ``K``-fold Fock space.

    A term vanishes as soon as one copy is off-diagonal; a surviving term with
    a unit copy diverges.
    """
    total = 0
    for key, c in terms.items():
        if any(m[0] != m[2] for m in key):
            continue
        if any(m == UNIT for m in key):
            raise DivergentTrace(f"term {key} has a unit factor under the trace")
        v = c
        for m in key:
            v *= mono_trace(m)
        total += v
    return total


def _prune(terms: dict, remaining: int) -> dict:
    """Drop terms whose grade in some copy can no longer return to zero."""
    return {k: c for k, c in terms.items() if all(abs(m[0] - m[2]) <= remaining for m in k)}


def prob_trace(sigma: Sequence[int], n: int | None = None) -> int:
    """``Tr(X_{sigma_1} ... X_{sigma_L})`` for a single configuration."""
    sigma = tuple(sigma)
    n = max(sigma) if n is None else n
    prod = {tuple(UNIT for _ in range(n * (n - 1) // 2)): 1}
    for pos, s in enumerate(sigma):
        prod = _prune(ctm_mul(prod, build_X(s, n).terms), len(sigma) - pos - 1)
        if not prod:
            return 0
    return ctm_trace(prod)


def mpf_steady(m: Sequence[int], budget: int | None = None) -> SteadyVector:
    """All weights of a sector from the trace formula, sharing prefix products."""
    m = check_basic(m)
    n = len(m) - 1
    L = sum(m)
    size = sector_size(m)
    budget = enumeration_budget(budget)
    if size > budget:
        raise BudgetExceeded(f"sector {m}", size, budget)
    X = [build_X(i, n).terms for i in range(n + 1)]
    weights: dict[tuple[int, ...], int] = {}

    def rec(prefix: list[int], counts: list[int], prod: dict):
        if len(prefix) == L:
            weights[tuple(prefix)] = ctm_trace(prod)
            return
        remaining = L - len(prefix) - 1
        for s in range(n + 1):
            if counts[s]:
                nxt = _prune(ctm_mul(prod, X[s]), remaining)
                counts[s] -= 1
                prefix.append(s)
                if nxt:
                    rec(prefix, counts, nxt)
                else:
                    _fill_zero(prefix, counts, weights, L)
                prefix.pop()
                counts[s] += 1

    rec([], list(m), {tuple(UNIT for _ in range(n * (n - 1) // 2)): 1})
    return SteadyVector(m, weights, "mpf")


def _fill_zero(prefix, counts, weights, L):
    if len(prefix) == L:
        weights[tuple(prefix)] = 0
        return
    for s, c in enumerate(counts):
        if c:
            counts[s] -= 1
            prefix.append(s)
            _fill_zero(prefix, counts, weights, L)
            prefix.pop()
            counts[s] += 1


def fock_trace(sigma: Sequence[int], n: int, cutoff: int) -> int:
    """Independent evaluation: multiply truncated Fock matrices copy by copy.

    Each choice of one term per site is a product of tensor factors, so its
    trace is the product over copies of the trace of a matrix product.
    """
    sigma = tuple(sigma)
    Ks = n * (n - 1) // 2
    X = [build_X(i, n).terms for i in range(n + 1)]
    cache: dict[Mono, np.ndarray] = {}

    def mat(mono: Mono) -> np.ndarray:
        if mono not in cache:
            cache[mono] = mono_fock(mono, cutoff).astype(np.int64)
        return cache[mono]

    total = 0
    for choice in itertools.product(*(list(X[s].items()) for s in sigma)):
        c = 1
        for _, coeff in choice:
            c *= coeff
        for copy in range(Ks):
            M = np.eye(cutoff + 1, dtype=np.int64)
            for key, _ in choice:
                M = M @ mat(key[copy])
            c *= int(np.trace(M))
            if not c:
                break
        total += c
    return total


# --- hat relation -------------------------------------------------------------


def hXX(alpha: int, beta: int, X: Sequence[CtmOperator]) -> CtmOperator:
    """``sum_{gamma,delta} h^{alpha,beta}_{gamma,delta} X_gamma X_delta``.

    With ``h|g,d> = |d,g> - |g,d>`` for ``g > d``, the coefficient
    ``h^{alpha,beta}_{gamma,delta}`` is the amplitude of ``|alpha,beta>`` in
    ``h|gamma,delta>``.
    """
    n = X[0].n
    out = CtmOperator(n, {}, X[0].order)
    for g in range(n + 1):
        for d in range(n + 1):
            amp = h_local((g, d), 1).get((alpha, beta), 0)
            if amp:
                out = out + (X[g] * X[d]).scaled(amp)
    return out


def hat_check(n: int, shifts: Sequence[int] | None = None) -> dict:
    """Test ``X_a Xh_b - Xh_a X_b = (hXX)_{a,b}`` for all ``a, b`` exactly.

    ``shifts`` replaces ``Xh_i`` by ``Xh_i + shifts[i] X_i``.  On failure the
    report says whether some per-index constant shift would repair every pair.
    """
    X = [build_X(i, n) for i in range(n + 1)]
    Xh = [build_Xhat(i, n) for i in range(n + 1)]
    if shifts is not None:
        Xh = [h + x.scaled(c) for h, x, c in zip(Xh, X, shifts)]
    failures = []
    residuals = {}
    for a in range(n + 1):
        for b in range(n + 1):
            res = X[a] * Xh[b] - Xh[a] * X[b] - hXX(a, b, X)
            if res:
                failures.append([a, b])
                residuals[(a, b)] = res
    report = {"n": n, "pairs": (n + 1) ** 2, "failures": failures, "ok": not failures}
    if failures:
        report["repairable_by_shift"] = _shift_repair(X, residuals, n)
    return report


def _shift_repair(X, residuals, n) -> list[int] | None:
    """Constants ``c`` with residual ``(c_b - c_a) X_a X_b`` for every failing pair, if they exist.

    Adding ``c_i X_i`` to ``Xh_i`` changes the left side by ``(c_b - c_a) X_a X_b``,
    so the shift must cancel each residual.  Pairs that pass impose ``c_a = c_b``
    unless ``X_a X_b = 0``.
    """
    diffs: dict[tuple[int, int], int] = {}
    for a in range(n + 1):
        for b in range(n + 1):
            prod = X[a] * X[b]
            res = residuals.get((a, b), CtmOperator(n))
            if not prod:
                if res:
                    return None
                continue
            key = next(iter(prod.terms))
            ratio, rem = divmod(-res.terms.get(key, 0), prod.terms[key])
            if rem or prod.scaled(ratio) != CtmOperator(n, {k: -v for k, v in res.terms.items()}):
                return None
            diffs[(a, b)] = ratio
    c = [0] * (n + 1)
    for b in range(1, n + 1):
        if (0, b) not in diffs:
            return None
        c[b] = diffs[(0, b)]
    if all(c[b] - c[a] == d for (a, b), d in diffs.items()):
        return c
    return None
