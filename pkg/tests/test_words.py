import itertools
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ntasep.words import (
    ChainError,
    Config,
    SectorError,
    Word,
    basic_sectors,
    check_basic,
    enumerate_B,
    enumerate_sector,
    levels_from_multiplicity,
    multiplicity_from_levels,
    phi,
    phi_inv,
    sector_size,
)


def test_enumerate_B_order_and_count():
    words = [str(w) for w in enumerate_B(2, 4)]
    assert words == ["0011", "0101", "0110", "1001", "1010", "1100"]
    for L in range(1, 8):
        for l in range(L + 1):
            got = [w.bits for w in enumerate_B(l, L)]
            brute = sorted(b for b in itertools.product((0, 1), repeat=L) if sum(b) == l)
            assert got == brute
            assert len(got) == comb(L, l)


def test_sector_enumeration_matches_permutations():
    for m in [(1, 1, 1), (2, 1, 1), (1, 2, 1, 1), (3, 1)]:
        got = [c.entries for c in enumerate_sector(m)]
        letters = [a for a, k in enumerate(m) for _ in range(k)]
        brute = sorted(set(itertools.permutations(letters)))
        assert got == brute
        assert sector_size(m) == len(brute)


def test_phi_example():
    sigma = Config.parse("3,0,1,2,3,0,1", 3)
    assert [str(w) for w in phi(sigma)] == ["1000100", "1001100", "1011101"]


def test_levels_example_and_inverse():
    assert levels_from_multiplicity((2, 2, 1, 2)) == (2, 3, 5)
    assert multiplicity_from_levels((2, 3, 5), 7) == (2, 2, 1, 2)


def test_non_basic_rejected():
    with pytest.raises(SectorError):
        check_basic((1, 0, 1))
    with pytest.raises(SectorError):
        check_basic((3,))


def test_phi_inv_rejects_non_chain():
    with pytest.raises(ChainError):
        phi_inv([Word.parse("100"), Word.parse("011")])
    with pytest.raises(ChainError):
        phi_inv([Word.parse("110"), Word.parse("100")])


@st.composite
def configs(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.lists(st.integers(1, 3), min_size=n + 1, max_size=n + 1))
    letters = [a for a, k in enumerate(m) for _ in range(k)]
    return Config(tuple(draw(st.permutations(letters))), n)


@given(configs())
def test_phi_roundtrip(sigma):
    chain = phi(sigma)
    assert phi_inv(chain) == sigma
    # column k reads 0...01...1 with exactly sigma_k ones
    for k, s in enumerate(sigma.entries):
        col = [w.bits[k] for w in chain]
        assert col == sorted(col) and sum(col) == s


@given(st.integers(2, 7), st.integers(1, 4))
def test_basic_sector_count(L, n):
    secs = list(basic_sectors(L, n))
    assert len(secs) == (comb(L - 1, n) if n < L else 0)
    assert all(sum(m) == L and min(m) >= 1 for m in secs)
    for m in secs:
        assert sector_size(m) == factorial(L) // _prod(factorial(x) for x in m)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out
