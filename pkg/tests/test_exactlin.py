from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie2.errors import InputError
from homlie2.exactlin import (Matrix, det_of, in_span, inverse, rank,
                              rank_and_kernel, solve_linear)

F = Fraction


def test_rank_and_kernel_identity():
    r, ker = rank_and_kernel(Matrix.identity(2))
    assert r == 2 and ker == []


def test_rank_and_kernel_zero():
    r, ker = rank_and_kernel(Matrix.zeros(2, 2))
    assert r == 0 and len(ker) == 2


def test_rank_and_kernel_rank_one():
    # hand Gaussian elimination: [[1,2],[2,4]] -> rank 1, kernel spanned by (2,-1)
    m = Matrix(2, 2, [[1, 2], [2, 4]])
    r, ker = rank_and_kernel(m)
    assert r == 1 and len(ker) == 1
    v = ker[0]
    assert v[0] * F(-1) == v[1] * F(2)  # proportional to (2, -1)
    assert m.apply(v) == (F(0), F(0))


def test_solve_identity():
    b = (F(3), F(-7))
    assert solve_linear(Matrix.identity(2), b) == b


def test_solve_zero_matrix_inconsistent():
    assert solve_linear(Matrix.zeros(2, 2), (F(1), F(0))) is None


def test_solve_back_substitution():
    # [[1,1],[0,1]] x = (3,1)  =>  x = (2,1)
    x = solve_linear(Matrix(2, 2, [[1, 1], [0, 1]]), (F(3), F(1)))
    assert x == (F(2), F(1))


def test_solve_shape_mismatch():
    with pytest.raises(InputError):
        solve_linear(Matrix.identity(2), (F(1),))


def test_in_span_cases():
    assert in_span([], (F(0), F(0)))
    assert not in_span([], (F(1),))
    assert not in_span([(F(1), F(0))], (F(0), F(1)))
    # (5,3) = 4*(1,1) + 1*(1,-1)
    assert in_span([(F(1), F(1)), (F(1), F(-1))], (F(5), F(3)))


def test_inverse_and_det():
    m = Matrix(2, 2, [[1, 2], [3, 5]])
    assert m * inverse(m) == Matrix.identity(2)
    assert det_of(m.data) == F(-1)
    with pytest.raises(InputError):
        inverse(Matrix(2, 2, [[1, 2], [2, 4]]))


small_matrix = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(st.lists(st.integers(-6, 6), min_size=m, max_size=m),
                           min_size=n, max_size=n)))


@given(small_matrix)
@settings(max_examples=80, deadline=None)
def test_rank_equals_transpose_rank(rows):
    m = Matrix.from_rows(rows)
    assert rank(m) == rank(m.transpose())


@given(small_matrix)
@settings(max_examples=80, deadline=None)
def test_kernel_vectors_annihilate(rows):
    m = Matrix.from_rows(rows)
    r, ker = rank_and_kernel(m)
    assert r + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


@given(small_matrix, st.lists(st.integers(-4, 4), min_size=1, max_size=4))
@settings(max_examples=80, deadline=None)
def test_solve_substitutes_exactly(rows, xs):
    m = Matrix.from_rows(rows)
    x = tuple(F(v) for v in (xs * m.cols)[:m.cols])
    b = m.apply(x)
    sol = solve_linear(m, b)
    assert sol is not None
    assert m.apply(sol) == b


@given(small_matrix)
@settings(max_examples=60, deadline=None)
def test_in_span_matches_solve(rows):
    m = Matrix.from_rows(rows)
    cols = m.columns()
    target = m.apply(tuple(F(1) for _ in range(m.cols)))
    assert in_span(cols, target)
