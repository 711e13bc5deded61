from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrorcayley.linsolve import InconsistentSystem, solve
from strategies import small_fractions


def test_small_system():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_overdetermined_consistent():
    assert solve([[1, 0], [0, 1], [1, 1]], [2, 3, 5]) == [2, 3]


def test_inconsistent():
    with pytest.raises(InconsistentSystem):
        solve([[1, 0], [0, 1], [1, 1]], [2, 3, 6])


def test_underdetermined():
    with pytest.raises(ValueError):
        solve([[1, 1], [2, 2]], [1, 2])


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small_fractions, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(small_fractions, min_size=n, max_size=n),
)))
def test_solution_satisfies_system(data):
    matrix, x = data
    rhs = [sum(a * b for a, b in zip(row, x)) for row in matrix]
    try:
        sol = solve(matrix, rhs)
    except InconsistentSystem:
        pytest.fail("a system built from a solution cannot be inconsistent")
    except ValueError:
        return  # singular matrix
    assert [sum(a * b for a, b in zip(row, sol)) for row in matrix] == rhs
