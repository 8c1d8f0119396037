import itertools
from fractions import Fraction

from ntasep.laurent import qpoly
from ntasep.osc0 import OscElem
from ntasep.oscq import QOscElem, qosc_mul, trace_zh

Q = Fraction(2, 3)
CUT = 10
SAFE = 6


def matmul(x, y):
    n = len(x)
    return [[sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def test_relations():
    a_p, a_m, k = QOscElem.a_plus(), QOscElem.a_minus(), QOscElem.k()
    one = QOscElem.scalar(1)
    assert a_m * a_p == one - QOscElem.mono(0, 2, qpoly({2: 1}))
    assert a_p * a_m == one - QOscElem.k(2)
    assert k * a_p == QOscElem.mono(1, 1, qpoly({1: -1}))
    assert k * a_m == QOscElem.mono(-1, 1, qpoly({-1: -1}))


def test_monomial_products_match_fock():
    monos = [QOscElem.mono(d, t) for d in range(-3, 4) for t in range(3)]
    for x, y in itertools.product(monos, repeat=2):
        lhs = qosc_mul(x, y).fock_matrix(Q, CUT)
        rhs = matmul(x.fock_matrix(Q, CUT), y.fock_matrix(Q, CUT))
        for r in range(SAFE):
            for c in range(SAFE):
                assert lhs[r][c] == rhs[r][c], (str(x), str(y), r, c)


def test_q_zero_specialization():
    x = QOscElem.a_plus() * QOscElem.a_minus()
    assert x.specialize_q0() == OscElem.scalar(1) - OscElem.k()
    y = QOscElem.a_minus() * QOscElem.a_plus()
    assert y.specialize_q0() == OscElem.scalar(1)


def test_trace_against_series():
    q, z = Fraction(1, 2), Fraction(1, 3)
    for t in range(0, 4):
        tr = trace_zh(QOscElem.k(t))
        series = sum(z**m * (-q) ** (t * m) for m in range(80))
        assert abs(tr.evaluate(q, z) - series) < Fraction(1, 10**30)
    assert trace_zh(QOscElem.a_plus()).is_zero()
