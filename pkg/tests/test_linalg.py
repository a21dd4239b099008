"""Exact linear algebra kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrinv.linalg import (QMatrix, det, intersection_dim, invert, kernel_basis,
                           primitive_integer_vector, qval, rref, solve_square)

small_int = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(small_int, min_size=c, max_size=c),
                min_size=r, max_size=r).map(
                    lambda rows: QMatrix.from_rows(rows, c))))


def test_qval_accepts_fraction_strings():
    assert qval("3/6") == Fraction(1, 2)
    assert qval(4) == Fraction(4)
    assert qval(Fraction(2, 3)) == Fraction(2, 3)


def test_rref_known_case():
    m = QMatrix.from_rows([[2, 4, 0], [1, 2, 1]], 3)
    r, pivots, rank = rref(m)
    assert rank == 2
    assert pivots == (0, 2)
    assert r.entries == ((Fraction(1), Fraction(2), Fraction(0)),
                         (Fraction(0), Fraction(0), Fraction(1)))


@given(matrices())
@settings(max_examples=60)
def test_rref_is_idempotent(m):
    r, _, rank = rref(m)
    r2, _, rank2 = rref(r)
    assert r2.entries == r.entries
    assert rank2 == rank


@given(matrices())
@settings(max_examples=60)
def test_rank_equals_transpose_rank(m):
    assert m.rank() == m.transpose().rank()


@given(matrices())
@settings(max_examples=60)
def test_kernel_vectors_annihilate(m):
    k = kernel_basis(m)
    assert k.rows == m.cols - m.rank()
    for row in k.entries:
        image = m.matvec(row)
        assert all(x == 0 for x in image)


def test_kernel_of_full_rank_matrix_is_empty():
    m = QMatrix.from_rows([[1, 0], [0, 1]], 2)
    assert kernel_basis(m).rows == 0


@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=60)
def test_det_zero_iff_rank_deficient(rows):
    m = QMatrix.from_rows(rows, 3)
    assert (det(m) == 0) == (m.rank() < 3)


def test_solve_square_and_invert():
    m = QMatrix.from_rows([[2, 1], [1, 1]], 2)
    x = solve_square(m, [3, 2])
    assert list(m.matvec(x)) == [Fraction(3), Fraction(2)]
    inv = invert(m)
    prod_rows = [[sum(m.entries[i][k] * inv.entries[k][j] for k in range(2))
                  for j in range(2)] for i in range(2)]
    assert prod_rows == [[1, 0], [0, 1]]


def test_solve_square_rejects_singular():
    m = QMatrix.from_rows([[1, 1], [2, 2]], 2)
    with pytest.raises(ValueError):
        solve_square(m, [1, 0])


def test_intersection_dim():
    a = QMatrix.from_rows([[1, 0, 0]], 3)
    b = QMatrix.from_rows([[0, 1, 0]], 3)
    assert intersection_dim(a, b) == 0
    c = QMatrix.from_rows([[1, 0, 0], [0, 1, 0]], 3)
    d = QMatrix.from_rows([[1, 1, 0]], 3)
    assert intersection_dim(c, d) == 1


def test_primitive_integer_vector():
    assert primitive_integer_vector([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert primitive_integer_vector([Fraction(-2), Fraction(4)]) == (1, -2)
    assert primitive_integer_vector([Fraction(0), Fraction(0), Fraction(5)]) == (0, 0, 1)


@given(matrices(3, 3))
@settings(max_examples=40)
def test_stack_rank_bounds(m):
    stacked = m.stack(m)
    assert stacked.rank() == m.rank()
