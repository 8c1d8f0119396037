import sympy
from hypothesis import given
from hypothesis import strategies as st

from ntasep.laurent import LPoly, neg_q_power

q, z = sympy.symbols("q z")
VARS = ("q", "z")

polys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=5
).map(lambda d: LPoly(VARS, d))


def to_sympy(p: LPoly):
    return sum((c * q**a * z**b for (a, b), c in p.terms.items()), sympy.Integer(0))


@given(polys, polys)
def test_ring_operations_match_sympy(x, y):
    assert sympy.expand(to_sympy(x * y) - to_sympy(x) * to_sympy(y)) == 0
    assert sympy.expand(to_sympy(x + y) - to_sympy(x) - to_sympy(y)) == 0
    assert sympy.expand(to_sympy(x - y) - to_sympy(x) + to_sympy(y)) == 0


@given(polys)
def test_substitutions(x):
    assert sympy.expand(to_sympy(x.subs_one("z")) - to_sympy(x).subs(z, 1)) == 0
    assert x.shift((2, 1)) == x * LPoly(VARS, {(2, 1): 1})


def test_neg_q_power():
    assert neg_q_power(3) == LPoly(("q",), {(3,): -1})
    assert neg_q_power(-2) == LPoly(("q",), {(-2,): 1})


def test_str_is_ascending_in_z():
    p = LPoly(VARS, {(3, 1): 1, (0, 0): 1})
    assert str(p) == "1 + 1*q^3*z"
