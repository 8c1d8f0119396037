import itertools
from fractions import Fraction

from ntasep.golden import load, parse_poly, parse_table_key
from ntasep.laurent import LPoly
from ntasep.oscq import QOscElem
from ntasep.quantum_r import (
    L_OPERATOR,
    QZ,
    q0_matches_combinatorial,
    rho,
    rho_bar,
    rmatrix_element,
    rmatrix_full,
    spectral_ybe_check,
)
from ntasep.words import Word


def e_le(l, L):
    return Word(tuple(1 if k < l else 0 for k in range(L)))


def test_reference_tables():
    for key, table in load()["rmatrix"].items():
        l, m, L = map(int, key.split(","))
        want = {parse_table_key(k): parse_poly(v) for k, v in table.items()}
        assert rmatrix_full(l, m, L) == want


def test_normalization():
    for L in (3, 4, 5):
        for l, m in itertools.product(range(1, L), repeat=2):
            i, j = e_le(l, L), e_le(m, L)
            assert rmatrix_element(i, j, i, j) == rho_bar(l, m, L)


def test_rho_example():
    # q^{-1} (1 + q z)(1 + q^3 z)
    assert rho(2, 1, 3) == LPoly(QZ, {(-1, 0): 1, (0, 1): 1, (2, 1): 1, (3, 2): 1})


def test_entries_are_polynomials():
    for L in (3, 4):
        for l, m in itertools.product(range(1, L), repeat=2):
            for el in rmatrix_full(l, m, L).values():
                assert el.is_polynomial()


def test_q0_specialization_is_combinatorial_r():
    for L in (3, 4):
        for l, m in itertools.product(range(1, L), repeat=2):
            assert q0_matches_combinatorial(l, m, L).ok


def test_element_against_numeric_fock_trace():
    """Evaluate rho * Tr(z^h prod L) by truncated Fock matrices at rational q, z."""
    q, z = Fraction(1, 3), Fraction(1, 5)
    cut = 40
    for (a, b, i, j), el in list(rmatrix_full(1, 2, 3).items())[:8]:
        mats = [L_OPERATOR[key].fock_matrix(q, cut) for key in zip(a.bits, b.bits, i.bits, j.bits)]
        M = [[Fraction(int(r == c)) for c in range(cut + 1)] for r in range(cut + 1)]
        for F in mats:
            M = [[sum(M[r][k] * F[k][c] for k in range(cut + 1) if M[r][k]) for c in range(cut + 1)] for r in range(cut + 1)]
        tr = sum(z**n * M[n][n] for n in range(cut + 1))
        want = tr * rho(1, 2, 3).evaluate(q=q, z=z)
        assert abs(want - el.evaluate(q=q, z=z)) < Fraction(1, 10**20)


def test_spectral_ybe_small():
    assert spectral_ybe_check(1, 2, 1, 3).ok
    assert spectral_ybe_check(2, 1, 2, 3).ok


def test_l_operator_q_zero_limit():
    assert L_OPERATOR[(1, 0, 1, 0)].specialize_q0().terms == {}
    assert L_OPERATOR[(0, 1, 0, 1)] == QOscElem.k()
