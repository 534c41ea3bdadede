from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shscore.graded import GradedVectorSpace as G, direct_sum, is_palindromic, poincare_string, shift

ranks = st.dictionaries(st.integers(-6, 12), st.integers(0, 5), max_size=6)
spaces = ranks.map(G)


def test_shift_examples():
    assert shift(G({0: 1}), 2) == G({2: 1})
    assert shift(G({0: 1, 2: 1}), 0) == G({0: 1, 2: 1})
    three_points = [shift(G.point(), 2) for _ in range(3)]
    assert direct_sum(three_points) == G({2: 3})


def test_direct_sum_examples():
    assert direct_sum([G({0: 1, 2: 1}), G({2: 3})]) == G({0: 1, 2: 4})
    assert direct_sum([]) == G()
    assert direct_sum([G({0: 1, 2: 1}), G({2: 1}), G({2: 1}), G({2: 1})]) == G({0: 1, 2: 4})


def test_palindromic_examples():
    assert is_palindromic(G({0: 1, 2: 1}), 1)
    assert is_palindromic(G({1: 1}), 1)
    assert not is_palindromic(G({0: 1, 1: 2}), Fraction(1, 2))
    with pytest.raises(ValueError):
        G({0: 1}).is_palindromic(Fraction(1, 3))


@pytest.mark.parametrize("ranks,text", [
    ({}, "0"),
    ({0: 1, 2: 4}, "1 + 4*t^2"),
    ({1: 1}, "t"),
    ({1: 3, 5: 1}, "3*t + t^5"),
])
def test_poincare_string(ranks, text):
    assert poincare_string(G(ranks)) == text


def test_zero_ranks_not_stored():
    V = G({0: 1, 1: 0, 3: 0})
    assert V.as_dict() == {0: 1}
    assert V == G({0: 1})
    with pytest.raises(ValueError):
        G({0: -1})


def test_dense_roundtrip():
    V = G({0: 1, 2: 4})
    assert V.to_dense() == [1, 0, 4]
    assert G.from_dense([1, 0, 4]) == V
    assert G().to_dense() == []


@given(spaces, st.integers(-10, 10), st.integers(-10, 10))
def test_shift_composes(V, a, b):
    assert shift(shift(V, a), b) == shift(V, a + b)


@given(spaces, spaces, spaces)
def test_direct_sum_commutative_associative(U, V, W):
    assert direct_sum([U, V]) == direct_sum([V, U])
    assert direct_sum([direct_sum([U, V]), W]) == direct_sum([U, direct_sum([V, W])])


@given(spaces, spaces, st.integers(-10, 10))
def test_total_rank(U, V, d):
    assert shift(U, d).total_rank == U.total_rank
    assert direct_sum([U, V]).total_rank == U.total_rank + V.total_rank


@given(spaces, st.integers(-10, 10), st.integers(-12, 24))
def test_palindromy_shift_invariant(V, d, twice_center):
    c = Fraction(twice_center, 2)
    assert is_palindromic(shift(V, d), c + d) == is_palindromic(V, c)
