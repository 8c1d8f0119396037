"""The n-TASEP generator on a sector and an exact null-space steady state."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .multiline import BudgetExceeded, SteadyVector
from .words import check_basic, enumerate_sector, sector_size

DEFAULT_SECTOR_BUDGET = 5000

Vec = dict[tuple[int, ...], int | Fraction]


class KernelDimensionError(ArithmeticError):
    pass


def h_local(sigma: Sequence[int], i: int) -> dict[tuple[int, ...], int]:
    """Local generator on the pair ``(i, i+1)`` (1-based, cyclic) applied to ``|sigma>``.

    A descent ``sigma_i > sigma_{i+1}`` gives ``|swapped> - |sigma>``; otherwise zero.
    """
    sigma = tuple(sigma)
    L = len(sigma)
    p, p1 = (i - 1) % L, i % L
    if sigma[p] <= sigma[p1]:
        return {}
    swapped = list(sigma)
    swapped[p], swapped[p1] = sigma[p1], sigma[p]
    return {tuple(swapped): 1, sigma: -1}


def H_apply(v: Mapping[tuple[int, ...], int | Fraction]) -> Vec:
    out: Vec = {}
    for sigma, c in v.items():
        if not c:
            continue
        for i in range(1, len(sigma) + 1):
            for tau, h in h_local(sigma, i).items():
                out[tau] = out.get(tau, 0) + h * c
    return {k: c for k, c in out.items() if c}


def tau_i(sigma: Sequence[int], i: int) -> tuple[int, ...]:
    """Sort the pair at sites ``(i, i+1)`` (1-based, cyclic) into ``(min, max)``."""
    sigma = list(sigma)
    L = len(sigma)
    p, p1 = (i - 1) % L, i % L
    a, b = sigma[p], sigma[p1]
    sigma[p], sigma[p1] = min(a, b), max(a, b)
    return tuple(sigma)


def generator_rows(m: Sequence[int]) -> tuple[list[tuple[int, ...]], list[dict[int, int]]]:
    """Sparse rows of ``H`` restricted to the sector; row ``r`` is the coefficient of ``|basis[r]>``."""
    basis = [c.entries for c in enumerate_sector(m)]
    index = {s: k for k, s in enumerate(basis)}
    rows: list[dict[int, int]] = [{} for _ in basis]
    for col, sigma in enumerate(basis):
        for tau, h in H_apply({sigma: 1}).items():
            r = index[tau]
            rows[r][col] = rows[r].get(col, 0) + h
    return basis, rows


def integer_nullspace(rows: list[dict[int, int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational null space, by integer row reduction with gcd content removal.

    Pivots are taken in column order, first available row; the result is
    deterministic.
    """
    work = [dict(r) for r in rows if r]
    pivots: list[tuple[int, dict[int, int]]] = []
    for col in range(ncols):
        pr = next((k for k, r in enumerate(work) if r.get(col)), None)
        if pr is None:
            continue
        prow = work.pop(pr)
        p = prow[col]
        reduced = []
        for r in work:
            f = r.get(col)
            if f:
                g = gcd(p, f)
                a, b = p // g, f // g
                new = {c: a * r.get(c, 0) - b * prow.get(c, 0) for c in set(r) | set(prow)}
                new = {c: v for c, v in new.items() if v}
                content = 0
                for v in new.values():
                    content = gcd(content, v)
                if content > 1:
                    new = {c: v // content for c, v in new.items()}
                if new:
                    reduced.append(new)
            else:
                reduced.append(r)
        work = reduced
        pivots.append((col, prow))
    pivot_cols = {c for c, _ in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fcol in free:
        x: dict[int, Fraction] = {fcol: Fraction(1)}
        for col, prow in reversed(pivots):
            s = sum(v * x.get(c, 0) for c, v in prow.items() if c != col)
            x[col] = Fraction(-s, prow[col])
        basis.append([x.get(c, Fraction(0)) for c in range(ncols)])
    return basis


def kernel_steady(m: Sequence[int], budget: int = DEFAULT_SECTOR_BUDGET) -> SteadyVector:
    """Steady state from the one-dimensional kernel of ``H``, scaled to coprime positive integers."""
    m = check_basic(m)
    size = sector_size(m)
    if size > budget:
        raise BudgetExceeded(f"sector {m}", size, budget)
    basis, rows = generator_rows(m)
    kern = integer_nullspace(rows, len(basis))
    if len(kern) != 1:
        raise KernelDimensionError(f"kernel of H on sector {m} has dimension {len(kern)}, expected 1")
    vec = kern[0]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if all(v <= 0 for v in ints):
        ints = [-v for v in ints]
    if any(v < 0 for v in ints):
        raise KernelDimensionError(f"kernel vector of sector {m} has mixed signs")
    return SteadyVector(m, dict(zip(basis, ints)), "kernel")


def is_proportional(u: Mapping, v: Mapping) -> Fraction | None:
    """The positive factor ``c`` with ``u = c v``, or None."""
    if set(k for k, x in u.items() if x) != set(k for k, x in v.items() if x):
        return None
    ratio = None
    for k, x in u.items():
        if not x:
            continue
        r = Fraction(x) / Fraction(v[k])
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    if ratio is None or ratio <= 0:
        return None
    return ratio
