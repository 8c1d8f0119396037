import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ntasep.osc0 import (
    UNIT,
    DivergentTrace,
    OscElem,
    fock_matrix,
    mono_fock,
    mono_mul,
    osc_trace,
)

CUT = 14


def basis(limit=3):
    out = [UNIT]
    out += [(s, 0, 0) for s in range(1, limit + 1)]
    out += [(0, 0, t) for t in range(1, limit + 1)]
    out += [(s, 1, t) for s in range(limit + 1) for t in range(limit + 1)]
    return out


def test_defining_relations():
    a_p, a_m, k = OscElem.a_plus(), OscElem.a_minus(), OscElem.k()
    assert k * k == k
    assert not (k * a_p)
    assert not (a_m * k)
    assert a_m * a_p == OscElem.scalar(1)
    assert a_p * a_m == OscElem.scalar(1) - k


def test_products_match_fock_matrices():
    # entries of a product only touch states below CUT - 6, far from truncation
    for x, y in itertools.product(basis(), repeat=2):
        lhs = sum((c * mono_fock(m, CUT) for c, m in mono_mul(x, y)), np.zeros((CUT + 1, CUT + 1), dtype=object))
        rhs = mono_fock(x, CUT).dot(mono_fock(y, CUT))
        assert (lhs[: CUT - 6, : CUT - 6] == rhs[: CUT - 6, : CUT - 6]).all(), (x, y)


elems = st.dictionaries(st.sampled_from(basis(2)), st.integers(-3, 3), max_size=4).map(OscElem)


@given(elems, elems, elems)
def test_associative(x, y, w):
    assert (x * y) * w == x * (y * w)


@given(elems, elems)
def test_fock_homomorphism(x, y):
    n = 8
    lhs = fock_matrix(x * y, CUT)[:n, :n]
    rhs = fock_matrix(x, CUT).dot(fock_matrix(y, CUT))[:n, :n]
    assert (lhs == rhs).all()


def test_trace_values():
    assert osc_trace(OscElem.k()) == 1
    assert osc_trace(OscElem.sandwich(2, 2)) == 1
    assert osc_trace(OscElem.sandwich(2, 1)) == 0
    assert osc_trace(OscElem.a_plus()) == 0
    with pytest.raises(DivergentTrace):
        osc_trace(OscElem.scalar(1))


def test_trace_of_projector_product_against_fock():
    x = (OscElem.scalar(1) + OscElem.a_plus()) * OscElem.k() * (OscElem.scalar(1) + OscElem.a_minus())
    assert osc_trace(x) == int(np.trace(fock_matrix(x, 10))) == 2
