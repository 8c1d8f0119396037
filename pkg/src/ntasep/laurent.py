"""Sparse multivariate Laurent polynomials with integer coefficients."""
from __future__ import annotations

from typing import Mapping, Sequence

Exp = tuple[int, ...]


class LPoly:
    """``sum c * x1^e1 * x2^e2 * ...`` over a fixed tuple of variable names.

    Exponents may be negative.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exp, int] | None = None):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, vars: Sequence[str], c: int) -> "LPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str, power: int = 1) -> "LPoly":
        e = [0] * len(vars)
        e[list(vars).index(name)] = power
        return cls(vars, {tuple(e): 1})

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Exp, c: int = 1) -> "LPoly":
        return cls(vars, {tuple(exp): c})

    def _coerce(self, other) -> "LPoly":
        if isinstance(other, LPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LPoly.const(self.vars, other)
        raise TypeError(f"cannot combine LPoly with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPoly.const(self.vars, other)
        return isinstance(other, LPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out = LPoly.const(self.vars, 1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exp: Exp) -> "LPoly":
        """Multiply by the monomial with exponent vector ``exp``."""
        return LPoly(self.vars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()})

    def min_exponents(self) -> Exp:
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(min(e[k] for e in self.terms) for k in range(len(self.vars)))

    def is_polynomial(self) -> bool:
        return all(x >= 0 for x in self.min_exponents())

    def subs_zero(self, name: str) -> "LPoly":
        """Set variable ``name`` to 0; requires no negative powers of it."""
        k = self.vars.index(name)
        if any(e[k] < 0 for e in self.terms):
            raise ZeroDivisionError(f"negative power of {name}")
        return LPoly(self.vars, {e: c for e, c in self.terms.items() if e[k] == 0})

    def subs_one(self, name: str) -> "LPoly":
        k = self.vars.index(name)
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            e2 = e[:k] + (0,) + e[k + 1:]
            out[e2] = out.get(e2, 0) + c
        return LPoly(self.vars, out)

    def evaluate(self, **values):
        """Numeric value; missing variables must not appear."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, x in zip(self.vars, e):
                if x:
                    term = term * values[name] ** x
            total += term
        return total

    def remap(self, vars: Sequence[str], mapping) -> "LPoly":
        """Re-express in ``vars``; ``mapping(exp)`` returns the new exponent tuple."""
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            e2 = tuple(mapping(e))
            out[e2] = out.get(e2, 0) + c
        return LPoly(vars, out)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        # ascending in the last variable first, then the earlier ones
        keys = sorted(self.terms, key=lambda e: tuple(reversed(e)))
        parts = []
        for e in keys:
            c = self.terms[e]
            factors = [f"{v}^{x}" if x != 1 else v for v, x in zip(self.vars, e) if x]
            body = "*".join([str(c)] + factors) if factors else str(c)
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LPoly({self})"


def qpoly(terms: Mapping[int, int] | None = None) -> LPoly:
    """Laurent polynomial in the single variable ``q`` from ``{exponent: coeff}``."""
    return LPoly(("q",), {(e,): c for e, c in (terms or {}).items()})


def neg_q_power(t: int) -> LPoly:
    """``(-q)^t`` for any integer ``t``."""
    return qpoly({t: -1 if t % 2 else 1})
