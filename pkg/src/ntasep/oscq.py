"""The q-oscillator algebra with exact Laurent coefficients and its z^h-trace.

Relations::

    k a+ = -q a+ k,   k a- = -q^{-1} a- k,   a+ a- = 1 - k^2,   a- a+ = 1 - q^2 k^2

Fock action: ``a+|m> = |m+1>``, ``a-|m> = (1 - q^{2m})|m-1>``, ``k|m> = (-q)^m |m>``.

Elements are kept with the oscillators to the left of the k-powers: the key
``(d, t)`` stands for ``A^d k^t`` where ``A^d = (a+)^d`` for ``d >= 0`` and
``(a-)^{-d}`` otherwise.  Coefficients are Laurent polynomials in ``q``.

Reordering rules (checked against the Fock action):

* ``k^t A^d = (-q)^{t d} A^d k^t``;
* ``(a-)^s (a+)^u = A^{u-s} prod_{e=u-r+1}^{u} (1 - q^{2e} k^2)``;
* ``(a+)^s (a-)^u = A^{s-u} prod_{j=u-r}^{u-1} (1 - q^{-2j} k^2)``;

with ``r = min(s, u)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .laurent import LPoly, neg_q_power, qpoly
from .osc0 import OscElem

QKey = tuple[int, int]

Q_ONE = qpoly({0: 1})


def _k2_product(exponents) -> dict[int, LPoly]:
    """Expand ``prod (1 - q^x k^2)`` as ``{power of k: coefficient}``."""
    out: dict[int, LPoly] = {0: Q_ONE}
    for x in exponents:
        nxt: dict[int, LPoly] = {}
        for t, c in out.items():
            nxt[t] = nxt.get(t, qpoly()) + c
            nxt[t + 2] = nxt.get(t + 2, qpoly()) - c.shift((x,))
        out = {t: c for t, c in nxt.items() if c}
    return out


def _osc_pair(d1: int, d2: int) -> tuple[int, dict[int, LPoly]]:
    """``A^{d1} A^{d2} = A^{d} g(k)``; returns ``(d, g)``."""
    if d1 >= 0 and d2 >= 0 or d1 <= 0 and d2 <= 0:
        return d1 + d2, {0: Q_ONE}
    if d1 < 0:
        s, u = -d1, d2
        r = min(s, u)
        return u - s, _k2_product(2 * e for e in range(u - r + 1, u + 1))
    s, u = d1, -d2
    r = min(s, u)
    return s - u, _k2_product(-2 * j for j in range(u - r, u))


class QOscElem:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[QKey, LPoly] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def mono(cls, d: int, t: int, coeff: LPoly | int = 1) -> "QOscElem":
        if isinstance(coeff, int):
            coeff = qpoly({0: coeff})
        return cls({(d, t): coeff})

    @classmethod
    def scalar(cls, c: LPoly | int) -> "QOscElem":
        return cls.mono(0, 0, c)

    @classmethod
    def a_plus(cls) -> "QOscElem":
        return cls.mono(1, 0)

    @classmethod
    def a_minus(cls) -> "QOscElem":
        return cls.mono(-1, 0)

    @classmethod
    def k(cls, t: int = 1) -> "QOscElem":
        return cls.mono(0, t)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, QOscElem) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return QOscElem(out)

    def __neg__(self):
        return QOscElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LPoly)):
            return QOscElem({k: c * other for k, c in self.terms.items()})
        return qosc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LPoly)):
            return self * other
        return NotImplemented

    def in_k_left_basis(self) -> dict[tuple[str, int, int], LPoly]:
        """Coefficients on ``(a+)^s k^t`` and ``k^t (a-)^s``, keyed ``("+", s, t)`` / ``("-", s, t)``."""
        out = {}
        for (d, t), c in self.terms.items():
            if d >= 0:
                out[("+", d, t)] = c
            else:
                # (a-)^s k^t = (-q)^{s t} k^t (a-)^s
                out[("-", -d, t)] = c * neg_q_power(-d * t)
        return out

    def specialize_q0(self) -> OscElem:
        """Set ``q = 0`` and collapse ``k^t -> k``; lands in the q = 0 algebra."""
        out: dict = {}
        for (sign, s, t), c in self.in_k_left_basis().items():
            c0 = c.subs_zero("q").constant_term()
            if not c0:
                continue
            f = int(t > 0)
            mono = (s, f, 0) if sign == "+" else (0, f, s)
            out[mono] = out.get(mono, 0) + c0
        return OscElem(out)

    def fock_matrix(self, q: Fraction, cutoff: int):
        """Matrix on ``|0>..|cutoff>`` at a numeric ``q`` (independent oracle)."""
        N = cutoff + 1
        mat = [[Fraction(0)] * N for _ in range(N)]
        for (d, t), c in self.terms.items():
            cv = c.evaluate(q=Fraction(q))
            for m in range(N):
                amp = cv * (-Fraction(q)) ** (t * m)
                out = m + d
                if d < 0:
                    for j in range(-d):
                        amp *= 1 - Fraction(q) ** (2 * (m - j))
                if 0 <= out < N and amp:
                    mat[out][m] += amp
        return mat

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (d, t) in sorted(self.terms):
            osc = "1" if d == 0 else (f"A+^{d}" if d > 0 else f"A-^{-d}")
            kp = f" K^{t}" if t else ""
            parts.append(f"({self.terms[(d, t)]})*{osc}{kp}")
        return " + ".join(parts)

    __repr__ = __str__


def qosc_mul(x: QOscElem, y: QOscElem) -> QOscElem:
    out: dict[QKey, LPoly] = {}
    for (d1, t1), c1 in x.terms.items():
        for (d2, t2), c2 in y.terms.items():
            c = c1 * c2 * neg_q_power(t1 * d2)
            d, g = _osc_pair(d1, d2)
            for tk, gc in g.items():
                key = (d, tk + t1 + t2)
                val = c * gc
                out[key] = out[key] + val if key in out else val
    return QOscElem(out)


def qosc_product(factors) -> QOscElem:
    out = QOscElem.scalar(1)
    for f in factors:
        out = qosc_mul(out, f)
        if not out:
            break
    return out


class QZRational:
    """``poly(q, z) + sum_t num_t(q) / (1 - (-q)^t z)`` with factored denominators."""

    __slots__ = ("fractions", "poly")

    def __init__(self, fractions: Mapping[int, LPoly] | None = None, poly: LPoly | None = None):
        self.fractions = {t: c for t, c in (fractions or {}).items() if c}
        self.poly = poly if poly is not None else LPoly(("q", "z"))

    def __eq__(self, other):
        return isinstance(other, QZRational) and self.fractions == other.fractions and self.poly == other.poly

    def __add__(self, other):
        out = dict(self.fractions)
        for t, c in other.fractions.items():
            out[t] = out[t] + c if t in out else c
        return QZRational(out, self.poly + other.poly)

    def is_zero(self) -> bool:
        return not self.fractions and not self.poly

    def evaluate(self, q: Fraction, z: Fraction) -> Fraction:
        total = Fraction(self.poly.evaluate(q=q, z=z))
        for t, c in self.fractions.items():
            total += Fraction(c.evaluate(q=q)) / (1 - (-q) ** t * z)
        return total

    def __str__(self):
        parts = [f"({c})/(1 - (-q)^{t}*z)" for t, c in sorted(self.fractions.items())]
        if self.poly:
            parts.insert(0, str(self.poly))
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def trace_zh(x: QOscElem) -> QZRational:
    """``Tr(z^h x)``; only the grade-0 part contributes, with ``k^t -> 1/(1 - (-q)^t z)``."""
    return QZRational({t: c for (d, t), c in x.terms.items() if d == 0})
