import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ntasep.markov import tau_i
from ntasep.multiline import (
    BudgetExceeded,
    MultilineState,
    T_full,
    T_k,
    carrier_evolve,
    carrier_inverse,
    conjecture_check,
    enumerate_multiline,
    fm_steady,
    mass,
    pi,
    t_step,
)
from ntasep.words import Word, enumerate_B, levels_from_multiplicity

EXAMPLE = MultilineState.parse(["000010", "001010", "001011"])


def test_projection_example():
    assert pi(EXAMPLE) == (0, 0, 2, 0, 3, 1)


def test_time_evolution_examples():
    assert T_k(EXAMPLE, 2) == EXAMPLE
    k_out, s3 = T_full(EXAMPLE, 3)
    assert [str(r) for r in s3.rows] == ["000010", "000110", "000111"] and k_out == 2
    assert pi(T_k(EXAMPLE, 6)) == (1, 0, 2, 0, 3, 0)
    assert pi(T_k(EXAMPLE, 5)) == (0, 0, 2, 0, 1, 3)


def test_t_step_wraps():
    # the pair at site 4 is (x_4, x_1)
    k, x = t_step(Word.parse("0001"), 4)
    assert str(x) == "1000" and k == 4
    k, x = t_step(Word.parse("0100"), 1)
    assert str(x) == "0100" and k == 4


@st.composite
def states(draw):
    n = draw(st.integers(1, 3))
    L = draw(st.integers(n + 1, 7))
    levels = sorted(draw(st.permutations(range(1, L)))[:n])
    rows = [Word.from_sites(draw(st.permutations(range(L)))[:l], L) for l in levels]
    return MultilineState(tuple(rows))


@given(states(), st.data())
def test_projection_intertwines_time_evolution(s, data):
    k = data.draw(st.integers(1, s.L))
    assert pi(T_k(s, k)) == tau_i(pi(s), k)


@given(states(), st.data())
def test_carrier_roundtrip(s, data):
    r = data.draw(st.integers(1, s.L - 1))
    u = Word.from_sites(data.draw(st.permutations(range(s.L)))[:r], s.L)
    u2, s2 = carrier_evolve(s, u)
    assert carrier_inverse(u2, s2) == (s, u)


def test_T_is_a_bijection_on_states_and_sites():
    m = (2, 1, 2)
    L = sum(m)
    images = set()
    for rows in enumerate_multiline(m):
        for k in range(1, L + 1):
            k2, s2 = T_full(MultilineState(rows), k)
            images.add((k2, s2.rows))
    assert len(images) == mass(m) * L


def test_fm_mass_and_support():
    for m in [(1, 1, 1), (2, 1, 1), (1, 2, 1, 1)]:
        v = fm_steady(m)
        assert v.total() == mass(m)
        assert all(w > 0 for w in v.weights.values())


def test_budget():
    with pytest.raises(BudgetExceeded):
        fm_steady((1, 1, 1, 1), budget=10)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("TASEP_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        fm_steady((1, 1, 1))


def test_conjecture_examples():
    rep = conjecture_check((1, 1, 1), 1)
    assert rep["singleton"] and rep["stationary"]
    assert conjecture_check((2, 1, 1), 2)["singleton"]


def test_single_species_carrier_passes():
    for m in [(2, 3), (1, 4), (3, 2)]:
        for r in range(1, sum(m)):
            rep = conjecture_check(m, r)
            assert rep["singleton"] and rep["stationary"]


def test_equal_weight_row_is_unchanged_by_matching_carrier():
    m = (1, 2, 1)
    levels = levels_from_multiplicity(m)
    L = sum(m)
    # a carrier of the first row's weight meets that row as the identity
    for rows in itertools.islice(enumerate_multiline(m), 30):
        for u in enumerate_B(levels[0], L):
            from ntasep.combi_r import r_apply

            assert r_apply(rows[0], u) == (rows[0], u)
