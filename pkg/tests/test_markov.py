import sympy
from hypothesis import given
from hypothesis import strategies as st

from ntasep.markov import H_apply, generator_rows, h_local, integer_nullspace, kernel_steady, tau_i
from ntasep.multiline import fm_steady


def test_h_local():
    assert h_local((2, 1, 0), 1) == {(1, 2, 0): 1, (2, 1, 0): -1}
    assert h_local((1, 2, 0), 1) == {}
    # pair (sigma_3, sigma_1) = (2, 1) on a ring of three
    assert h_local((1, 0, 2), 3) == {(2, 0, 1): 1, (1, 0, 2): -1}


def test_tau():
    assert tau_i((2, 1, 0), 1) == (1, 2, 0)
    assert tau_i((1, 0, 2), 3) == (2, 0, 1)
    assert tau_i((0, 1, 2), 1) == (0, 1, 2)


def test_kernel_matches_sympy_nullspace():
    for m in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 1, 1), (2, 2, 1)]:
        basis, rows = generator_rows(m)
        M = sympy.zeros(len(basis), len(basis))
        for r, row in enumerate(rows):
            for c, v in row.items():
                M[r, c] = v
        ns = M.nullspace()
        assert len(ns) == 1
        vec = ns[0] / min(x for x in ns[0] if x != 0)
        ours = kernel_steady(m)
        scale = sympy.Rational(ours.weights[basis[0]], 1) / vec[0]
        assert all(ours.weights[s] == scale * vec[k] for k, s in enumerate(basis))


def test_kernel_equals_fm_examples():
    for m in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 1, 1)]:
        assert kernel_steady(m).weights == fm_steady(m).normalized().weights


def test_nullspace_of_rank_deficient_matrix():
    rows = [{0: 1, 1: 1, 2: 1}, {0: 2, 1: 2, 2: 2}]
    kern = integer_nullspace(rows, 3)
    assert len(kern) == 2
    for v in kern:
        assert sum(v) == 0


@given(st.lists(st.integers(1, 2), min_size=3, max_size=4))
def test_stationarity_of_fm(m):
    assert H_apply(fm_steady(m).weights) == {}
