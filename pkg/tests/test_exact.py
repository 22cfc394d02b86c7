from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from f4rigid.exact import identity, integer_inverse, inverse, matmul, nullity, rank, solve_row

square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80, deadline=None)
@given(square)
def test_rank_and_inverse_vs_sympy(m):
    sm = sympy.Matrix(m)
    assert rank(m) == sm.rank()
    assert nullity(m) == len(m) - sm.rank()
    if sm.det() != 0:
        inv = inverse(m)
        assert matmul(m, inv) == identity(len(m))
        assert sympy.Matrix(inv) == sm.inv()
    else:
        with pytest.raises(ValueError):
            inverse(m)


@settings(max_examples=60, deadline=None)
@given(square, st.data())
def test_solve_row(basis, data):
    c = data.draw(st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)))
    x = [sum(ci * row[j] for ci, row in zip(c, basis)) for j in range(len(basis[0]))]
    sol = solve_row(basis, x)
    assert sol is not None
    assert [sum(si * row[j] for si, row in zip(sol, basis)) for j in range(len(x))] == x


def test_solve_row_inconsistent():
    assert solve_row([[1, 0]], [0, 1]) is None
    assert solve_row([[2, 0]], [1, 0]) == [Fraction(1, 2)]


def test_integer_inverse():
    assert integer_inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError):
        integer_inverse([[2, 0], [0, 1]])
