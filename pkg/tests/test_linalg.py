from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from centralizer.arith import GF, QQ, ZZ, RingError
from centralizer.linalg import (DenseMatrix, ShapeError, block_diag, charpoly,
                                charpoly_and_rational_roots, in_span, matrix_unit,
                                nullspace, prime_field_roots, rank, rational_roots,
                                solve_linear)

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_basic_arithmetic():
    a = DenseMatrix.from_rows(QQ, [[1, 2], [3, 4]])
    b = DenseMatrix.identity(QQ, 2)
    assert a @ b == a
    assert (a + a) == a.scale(2)
    assert (a - a).is_zero()
    assert a.transpose()[0, 1] == 3
    assert a ** 2 == DenseMatrix.from_rows(QQ, [[7, 10], [15, 22]])


def test_shape_and_ring_errors():
    a = DenseMatrix.identity(QQ, 2)
    with pytest.raises(ShapeError):
        a @ DenseMatrix.identity(QQ, 3)
    with pytest.raises(ShapeError):
        a + DenseMatrix.identity(GF(3), 2)
    with pytest.raises(ShapeError):
        DenseMatrix(QQ, [[1, 2], [3]])


def test_matrix_unit_is_one_based():
    e = matrix_unit(QQ, 3, 1, 3)
    assert e[0, 2] == 1 and sum(e.flat()) == 1
    with pytest.raises(ShapeError):
        matrix_unit(QQ, 3, 0, 1)


def test_block_diag():
    m = block_diag(QQ, [DenseMatrix.identity(QQ, 2), DenseMatrix.from_rows(QQ, [[5]])])
    assert m == DenseMatrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 5]])


def test_elimination_needs_a_field():
    with pytest.raises(RingError):
        nullspace(DenseMatrix.identity(ZZ, 2))


def test_rank_over_z_uses_rationals():
    assert rank(DenseMatrix.from_rows(ZZ, [[2, 4], [1, 2]])) == 1


def test_gf2_rank_differs_from_q():
    m = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rank(DenseMatrix.from_rows(QQ, m)) == 3
    assert rank(DenseMatrix.from_rows(GF(2), m)) == 2


@given(matrices(3, 4))
def test_rank_matches_sympy(rows):
    assert rank(DenseMatrix.from_rows(QQ, rows)) == sp.Matrix(rows).rank()


@given(matrices(3, 4), st.sampled_from([QQ, GF(5), GF(2)]))
def test_nullspace_vectors_are_killed(rows, ring):
    a = DenseMatrix.from_rows(ring, rows)
    kernel = nullspace(a)
    assert len(kernel) == 4 - rank(a)
    for v in kernel:
        assert (a @ v).is_zero()


@given(matrices(3, 3), matrices(3, 1))
def test_solve_linear(rows, rhs):
    a = DenseMatrix.from_rows(QQ, rows)
    b = DenseMatrix.from_rows(QQ, rhs)
    x = solve_linear(a, b)
    consistent = sp.Matrix(rows).rank() == sp.Matrix(rows).row_join(sp.Matrix(rhs)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert a @ x == b


def test_in_span_over_z_needs_integral_coordinates():
    assert in_span(ZZ, [[2, 0]], [4, 0])
    assert not in_span(ZZ, [[2, 0]], [1, 0])
    assert in_span(QQ, [[2, 0]], [1, 0])
    assert not in_span(QQ, [[1, 0]], [0, 1])


@given(matrices(4, 4))
def test_charpoly_matches_sympy(rows):
    x = sp.Symbol("x")
    expected = sp.Poly(sp.Matrix(rows).charpoly(x).as_expr(), x).all_coeffs()
    assert charpoly(DenseMatrix.from_rows(QQ, rows)) == [Fraction(int(c)) for c in expected]


def test_rational_roots_with_multiplicity():
    # (x - 1/2)^2 (x + 3) x
    poly = sp.Poly(sp.expand((2 * sp.Symbol("x") - 1) ** 2 * (sp.Symbol("x") + 3) * sp.Symbol("x")))
    roots = rational_roots([Fraction(int(c)) for c in poly.all_coeffs()])
    assert roots == [(Fraction(-3), 1), (Fraction(0), 1), (Fraction(1, 2), 2)]
    assert rational_roots([1, 0, 1]) == []


def test_roots_of_a_jordan_matrix():
    c = DenseMatrix.from_rows(QQ, [[2, 1, 0], [0, 2, 0], [0, 0, -1]])
    _, roots = charpoly_and_rational_roots(c)
    assert roots == [(-1, 1), (2, 2)]
    with pytest.raises(RingError):
        charpoly_and_rational_roots(DenseMatrix.identity(GF(3), 2))


def test_prime_field_roots():
    c = DenseMatrix.from_rows(GF(5), [[1, 1], [0, 1]])
    assert prime_field_roots(c) == [(1, 2)]
    # x^2 + 1 splits mod 5 (roots 2, 3) but not mod 3
    comp = [[0, -1], [1, 0]]
    assert prime_field_roots(DenseMatrix.from_rows(GF(5), comp)) == [(2, 1), (3, 1)]
    assert prime_field_roots(DenseMatrix.from_rows(GF(3), comp)) == []
