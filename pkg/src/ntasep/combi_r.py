"""Combinatorial R on ``B^l (x) B^m`` by the Nakayashiki-Yamada dot-matching rule.

``r_apply(i, j)`` returns ``(b, a)`` with ``b`` of weight ``|j|`` and ``a`` of
weight ``|i|``, i.e. ``R(i (x) j) = b (x) a``.  Draw ``i`` as the lower row and
``j`` as the upper row.

* ``l <= m``: every dot of ``i`` is joined to the rightmost still-free dot of
  ``j`` weakly left of it (same site counts; wrap around cyclically).  The free
  dots of ``j`` drop to the lower row: ``b = i + free``, ``a = joined``.
* ``l > m``: every dot of ``j`` is joined to the leftmost still-free dot of
  ``i`` weakly right of it.  The free dots of ``i`` rise to the upper row:
  ``a = j + free``, ``b = joined``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .osc0 import AM, AP, K, UNIT, Mono, mono_mul, mono_trace
from .words import Word, enumerate_B


def _match(lower: Sequence[int], upper: set[int], L: int, leftward: bool) -> set[int]:
    """Join each site in ``lower`` to a free site of ``upper``; return the joined sites."""
    free = set(upper)
    joined = set()
    for p in lower:
        if leftward:
            scan = [(p - d) % L for d in range(L)]
        else:
            scan = [(p + d) % L for d in range(L)]
        for q in scan:
            if q in free:
                free.discard(q)
                joined.add(q)
                break
        else:
            raise AssertionError("ran out of partner dots")
    return joined


def r_apply(i: Word, j: Word, order: str | Sequence[int] = "ltr") -> tuple[Word, Word]:
    """``R(i (x) j) = b (x) a``; returns ``(b, a)``.

    ``order`` picks the processing order of the dots being matched: ``"ltr"``,
    ``"rtl"`` or an explicit permutation of their indices.  The result does not
    depend on it.
    """
    if len(i) != len(j):
        raise ValueError(f"length mismatch: {len(i)} vs {len(j)}")
    L = len(i)
    l, m = i.weight, j.weight
    if l == m:
        # every dot is matched and nothing drops down: R(i (x) j) = i (x) j
        return i, j
    if l < m:
        movers = i.sites()
        targets = set(j.sites())
    else:
        movers = j.sites()
        targets = set(i.sites())
    if order == "rtl":
        movers = movers[::-1]
    elif order != "ltr":
        movers = [movers[k] for k in order]
    joined = _match(movers, targets, L, leftward=l < m)
    free = targets - joined
    if l < m:
        assert not free & set(i.sites())
        b = Word.from_sites(set(i.sites()) | free, L)
        a = Word.from_sites(joined, L)
    else:
        assert not free & set(j.sites())
        a = Word.from_sites(set(j.sites()) | free, L)
        b = Word.from_sites(joined, L)
    return b, a


def r_inverse(b: Word, a: Word) -> tuple[Word, Word]:
    """Inverse of :func:`r_apply`: given ``b (x) a`` return ``(i, j)``."""
    # R^{m,l} R^{l,m} = id
    return r_apply(b, a)


# five-vertex weights L^{a,b}_{i,j}: key (a, b, i, j)
FIVE_VERTEX: dict[tuple[int, int, int, int], Mono] = {
    (0, 0, 0, 0): UNIT,
    (1, 1, 1, 1): UNIT,
    (0, 1, 0, 1): K,
    (0, 1, 1, 0): AP,
    (1, 0, 0, 1): AM,
}


def r_element(a: Word, b: Word, i: Word, j: Word) -> int:
    """``R^{a,b}_{i,j} = Tr(L^{a_1,b_1}_{i_1,j_1} ... L^{a_L,b_L}_{i_L,j_L})`` for ``|i| < |j|``."""
    l, m = i.weight, j.weight
    if not l < m:
        raise ValueError("the trace form holds for |i| < |j| only")
    if (a.weight, b.weight) != (l, m):
        return 0
    if any(x + y != u + v for x, y, u, v in zip(a.bits, b.bits, i.bits, j.bits)):
        return 0
    # a+ a- = 1 - k can split a product, so keep a term map
    terms: dict[Mono, int] = {UNIT: 1}
    for key in zip(a.bits, b.bits, i.bits, j.bits):
        mono = FIVE_VERTEX.get(key)
        if mono is None:
            return 0
        nxt: dict[Mono, int] = {}
        for m0, c0 in terms.items():
            for c, m1 in mono_mul(m0, mono):
                nxt[m1] = nxt.get(m1, 0) + c * c0
        terms = {k: c for k, c in nxt.items() if c}
        if not terms:
            return 0
    return sum(c * mono_trace(m0) for m0, c in terms.items())


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "checked": self.checked,
            "ok": self.ok,
            "first_failure": self.failures[0] if self.failures else None,
        }


def _apply_pair(state: list[Word], pos: int) -> list[Word]:
    out = list(state)
    b, a = r_apply(out[pos], out[pos + 1])
    out[pos], out[pos + 1] = b, a
    return out


def ybe_both_sides(x: Word, y: Word, z: Word) -> tuple[list[Word], list[Word]]:
    """``(R x 1)(1 x R)(R x 1)`` and ``(1 x R)(R x 1)(1 x R)`` applied to ``x (x) y (x) z``."""
    s = [x, y, z]
    lhs = _apply_pair(_apply_pair(_apply_pair(s, 0), 1), 0)
    rhs = _apply_pair(_apply_pair(_apply_pair(s, 1), 0), 1)
    return lhs, rhs


def ybe_check(k: int, l: int, m: int, L: int, samples: int | None = None, seed: int = 0) -> CheckReport:
    """Yang-Baxter check on ``B^k (x) B^l (x) B^m``; exhaustive unless ``samples`` is given."""
    rep = CheckReport(f"ybe k={k} l={l} m={m} L={L}")
    if samples is None:
        triples = itertools.product(enumerate_B(k, L), enumerate_B(l, L), enumerate_B(m, L))
    else:
        rng = random.Random(seed)
        triples = (
            tuple(Word.from_sites(rng.sample(range(L), w), L) for w in (k, l, m))
            for _ in range(samples)
        )
    for x, y, z in triples:
        rep.checked += 1
        lhs, rhs = ybe_both_sides(x, y, z)
        if lhs != rhs:
            rep.failures.append(
                {"input": [str(x), str(y), str(z)], "lhs": list(map(str, lhs)), "rhs": list(map(str, rhs))}
            )
    return rep


def r_inverse_check(l: int, m: int, L: int) -> CheckReport:
    rep = CheckReport(f"inverse l={l} m={m} L={L}")
    for i in enumerate_B(l, L):
        for j in enumerate_B(m, L):
            rep.checked += 1
            b, a = r_apply(i, j)
            back = r_apply(b, a)
            if back != (i, j):
                rep.failures.append({"input": [str(i), str(j)], "image": [str(b), str(a)]})
    return rep


def ybe_random(L: int, samples: int, seed: int = 0) -> CheckReport:
    """Yang-Baxter check on ``samples`` seeded triples with weights drawn uniformly from ``1..L-1``."""
    rep = CheckReport(f"ybe random L={L} samples={samples} seed={seed}")
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (Word.from_sites(rng.sample(range(L), rng.randint(1, L - 1)), L) for _ in range(3))
        rep.checked += 1
        lhs, rhs = ybe_both_sides(x, y, z)
        if lhs != rhs:
            rep.failures.append(
                {"input": [str(x), str(y), str(z)], "lhs": list(map(str, lhs)), "rhs": list(map(str, rhs))}
            )
    return rep


def ybe_sweep(L: int) -> CheckReport:
    """Exhaustive Yang-Baxter check over every ``(k, l, m)`` in ``1..L-1``."""
    rep = CheckReport(f"ybe exhaustive L={L}")
    for k, l, m in itertools.product(range(1, L), repeat=3):
        sub = ybe_check(k, l, m, L)
        rep.checked += sub.checked
        rep.failures.extend(sub.failures)
    return rep
