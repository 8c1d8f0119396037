"""Quantum R matrix elements from the q-oscillator matrix product formula.

``R(z)(|i> (x) |j>) = sum_{a,b} R^{a,b}_{i,j}(z) |b> (x) |a>`` with

    R^{a,b}_{i,j}(z) = rho(z) Tr(z^h L^{a_1,b_1}_{i_1,j_1} ... L^{a_L,b_L}_{i_L,j_L})

normalized so that ``e_{<=l} (x) e_{<=m} -> rho_bar(z) e_{<=m} (x) e_{<=l}``.
Every factor of ``rho`` has the form ``1 - (-q)^t z``, which is exactly the
shape of the denominators the trace produces, so the product is taken by
cancelling factors rather than by rational-function arithmetic.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .combi_r import CheckReport, r_apply
from .laurent import LPoly, qpoly
from .oscq import QOscElem, qosc_product, trace_zh
from .words import Word, enumerate_B

QZ = ("q", "z")

# L^{a,b}_{i,j}, keyed (a, b, i, j)
L_OPERATOR: dict[tuple[int, int, int, int], QOscElem] = {
    (0, 0, 0, 0): QOscElem.scalar(1),
    (1, 1, 1, 1): QOscElem.scalar(1),
    (0, 1, 1, 0): QOscElem.a_plus(),
    (1, 0, 0, 1): QOscElem.a_minus(),
    (0, 1, 0, 1): QOscElem.k(),
    (1, 0, 1, 0): QOscElem.mono(0, 1, qpoly({1: 1})),
}


class InexactDivision(ArithmeticError):
    """The trace had a denominator that rho(z) cannot cancel."""


def rho_factors(l: int, m: int, L: int) -> tuple[int, list[int], list[int]]:
    """``(p, bar, extra)`` with ``rho = q^{-p} prod_{t in extra + bar} (1 - (-q)^t z)``.

    ``bar`` lists the exponents of ``rho_bar``; ``extra`` is ``[|l - m|]``.
    """
    lo = max(l + m - L, 0)
    bar = [l + m - 2 * i for i in range(lo, min(l, m))]
    return max(l - m, 0), bar, [abs(l - m)]


def _factor(t: int) -> LPoly:
    sign = -1 if t % 2 else 1
    # 1 - (-q)^t z
    return LPoly(QZ, {(0, 0): 1, (t, 1): -sign})


def _product(ts) -> LPoly:
    out = LPoly.const(QZ, 1)
    for t in ts:
        out = out * _factor(t)
    return out


def rho_bar(l: int, m: int, L: int) -> LPoly:
    return _product(rho_factors(l, m, L)[1])


def rho(l: int, m: int, L: int) -> LPoly:
    p, bar, extra = rho_factors(l, m, L)
    return _product(extra + bar).shift((-p, 0))


def _apply_rho(tr, l: int, m: int, L: int) -> LPoly:
    p, bar, extra = rho_factors(l, m, L)
    ts = extra + bar
    out = LPoly(QZ)
    if tr.poly:
        out = out + tr.poly * _product(ts)
    for t, num in tr.fractions.items():
        if t not in ts:
            raise InexactDivision(f"denominator 1 - (-q)^{t} z is not a factor of rho")
        rest = list(ts)
        rest.remove(t)
        out = out + num.remap(QZ, lambda e: (e[0], 0)) * _product(rest)
    return out.shift((-p, 0))


def rmatrix_element(a: Word, b: Word, i: Word, j: Word) -> LPoly:
    """``R^{a,b}_{i,j}(z)`` as a polynomial in ``q`` and ``z``."""
    L = len(i)
    l, m = i.weight, j.weight
    if (a.weight, b.weight) != (l, m):
        return LPoly(QZ)
    if any(x + y != u + v for x, y, u, v in zip(a.bits, b.bits, i.bits, j.bits)):
        return LPoly(QZ)
    factors = []
    for key in zip(a.bits, b.bits, i.bits, j.bits):
        f = L_OPERATOR.get(key)
        if f is None:
            return LPoly(QZ)
        factors.append(f)
    prod = qosc_product(factors)
    out = _apply_rho(trace_zh(prod), l, m, L)
    if not out.is_polynomial():
        raise InexactDivision(f"negative power of q survives in R^{{{a},{b}}}_{{{i},{j}}}: {out}")
    return out


def weight_conserving_outputs(i: Word, j: Word):
    """All ``(a, b)`` with ``|a| = |i|``, ``|b| = |j|`` and ``a + b = i + j``."""
    L = len(i)
    s = [x + y for x, y in zip(i.bits, j.bits)]
    ones = [k for k in range(L) if s[k] == 1]
    need = i.weight - s.count(2)
    if need < 0 or need > len(ones):
        return
    for chosen in itertools.combinations(ones, need):
        ab = [1 if s[k] == 2 else 0 for k in range(L)]
        for k in chosen:
            ab[k] = 1
        a = Word(tuple(ab))
        b = Word(tuple(x - y for x, y in zip(s, ab)))
        yield a, b


@lru_cache(maxsize=None)
def rmatrix_full(l: int, m: int, L: int) -> dict[tuple[Word, Word, Word, Word], LPoly]:
    """Every nonzero ``R^{a,b}_{i,j}(z)`` on ``B^l (x) B^m``, keyed ``(a, b, i, j)``."""
    table = {}
    for i in enumerate_B(l, L):
        for j in enumerate_B(m, L):
            for a, b in weight_conserving_outputs(i, j):
                el = rmatrix_element(a, b, i, j)
                if el:
                    table[(a, b, i, j)] = el
    return table


def table_as_text(table) -> dict[str, str]:
    return {f"{a},{b},{i},{j}": str(v) for (a, b, i, j), v in sorted(table.items(), key=lambda kv: tuple(map(str, kv[0])))}


def specialize_q0(table) -> dict[tuple[Word, Word], tuple[Word, Word]]:
    """Evaluate at ``q = 0, z = 1``; returns the induced map ``(i, j) -> (b, a)``.

    Raises ``ValueError`` unless the specialized table is 0/1 with exactly one
    nonzero entry per input.
    """
    image: dict[tuple[Word, Word], tuple[Word, Word]] = {}
    for (a, b, i, j), el in table.items():
        v = el.subs_zero("q").subs_one("z").constant_term()
        if v == 0:
            continue
        if v != 1:
            raise ValueError(f"entry {a},{b},{i},{j} specializes to {v}")
        if (i, j) in image:
            raise ValueError(f"input {i},{j} has two images at q=0")
        image[(i, j)] = (b, a)
    return image


def q0_matches_combinatorial(l: int, m: int, L: int) -> CheckReport:
    rep = CheckReport(f"q=0 specialization l={l} m={m} L={L}")
    image = specialize_q0(rmatrix_full(l, m, L))
    for i in enumerate_B(l, L):
        for j in enumerate_B(m, L):
            rep.checked += 1
            got = image.get((i, j))
            want = r_apply(i, j)
            if got != want:
                rep.failures.append({"input": [str(i), str(j)], "q0": got and list(map(str, got)), "ny": list(map(str, want))})
    return rep


# --- spectral Yang-Baxter -----------------------------------------------------

QZW = ("q", "z", "w")


def _spectral(el: LPoly, which: str) -> LPoly:
    if which == "z":
        return el.remap(QZW, lambda e: (e[0], e[1], 0))
    if which == "w":
        return el.remap(QZW, lambda e: (e[0], 0, e[1]))
    # z * w
    return el.remap(QZW, lambda e: (e[0], e[1], e[1]))


def _by_input(table, which: str):
    out: dict[tuple[Word, Word], list] = {}
    for (a, b, i, j), el in table.items():
        out.setdefault((i, j), []).append(((b, a), _spectral(el, which)))
    return out


def _act(vec: dict, pos: int, rows) -> dict:
    out: dict = {}
    for state, c in vec.items():
        for (x, y), el in rows.get((state[pos], state[pos + 1]), ()):
            new = list(state)
            new[pos], new[pos + 1] = x, y
            new = tuple(new)
            val = c * el
            out[new] = out[new] + val if new in out else val
    return {s: c for s, c in out.items() if c}


def spectral_ybe_check(k: int, l: int, m: int, L: int) -> CheckReport:
    """``(R^{l,m}(z) x 1)(1 x R^{k,m}(zw))(R^{k,l}(w) x 1) = (1 x R^{k,l}(w))(R^{k,m}(zw) x 1)(1 x R^{l,m}(z))``."""
    rep = CheckReport(f"spectral ybe k={k} l={l} m={m} L={L}")
    r_lm = _by_input(rmatrix_full(l, m, L), "z")
    r_km = _by_input(rmatrix_full(k, m, L), "zw")
    r_kl = _by_input(rmatrix_full(k, l, L), "w")
    one = LPoly.const(QZW, 1)
    for x in enumerate_B(k, L):
        for y in enumerate_B(l, L):
            for u in enumerate_B(m, L):
                rep.checked += 1
                v = {(x, y, u): one}
                lhs = _act(_act(_act(v, 0, r_kl), 1, r_km), 0, r_lm)
                rhs = _act(_act(_act(v, 1, r_lm), 0, r_km), 1, r_kl)
                if lhs != rhs:
                    rep.failures.append({"input": [str(x), str(y), str(u)]})
    return rep
