from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macaulay.errors import ShapeMismatch
from macaulay.exactla import RationalMatrix, null_space, rank, row_space_equal, rref

M = RationalMatrix.from_rows


def test_rref_examples():
    R, r, piv = rref(M([[2, 4], [1, 2]]))
    assert R == M([[1, 2], [0, 0]]) and r == 1 and piv == [0]

    I3 = RationalMatrix.identity(3)
    assert rref(I3) == (I3, 3, [0, 1, 2])

    # hand elimination: subtract 2 * row 2 from row 1
    R, r, piv = rref(M([[1, 2, 3], [0, 1, 1]]))
    assert R == M([[1, 0, 1], [0, 1, 1]]) and r == 2 and piv == [0, 1]


def test_null_space_examples():
    assert null_space(RationalMatrix.identity(2)) == []
    assert null_space(RationalMatrix.zeros(2, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    A = M([[1, 2, 3], [0, 1, 1]])
    (v,) = null_space(A)
    assert v == (-1, -1, 1)
    assert A @ v == (0, 0)


def test_null_space_of_empty_matrix():
    assert null_space(RationalMatrix(0, 2, ())) == [(1, 0), (0, 1)]


def test_row_space_examples():
    assert row_space_equal(M([[1, 0]]), M([[2, 0]]))
    assert not row_space_equal(M([[1, 0]]), M([[0, 1]]))
    assert row_space_equal(M([[1, 1], [0, 1]]), RationalMatrix.identity(2))
    with pytest.raises(ShapeMismatch):
        row_space_equal(M([[1, 0]]), M([[1, 0, 0]]))


def test_shape_validation():
    with pytest.raises(ShapeMismatch):
        RationalMatrix(2, 2, ((1, 2),))


entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw):
    r = draw(st.integers(0, 5))
    c = draw(st.integers(1, 5))
    # bias toward rank deficiency by reusing rows
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    if rows and draw(st.booleans()):
        rows.append([2 * v for v in rows[0]])
    return M(rows, c)


@given(matrices())
def test_rref_idempotent(A):
    R, _, _ = rref(A)
    assert rref(R)[0] == R


@given(matrices())
def test_rank_nullity(A):
    assert rank(A) + len(null_space(A)) == A.ncols


@given(matrices())
def test_null_vectors_are_exact_zeros(A):
    for v in null_space(A):
        assert all(x == 0 for x in A @ v)


@given(matrices())
@settings(max_examples=50)
def test_rref_matches_sympy(A):
    sympy = pytest.importorskip("sympy")
    if A.nrows == 0:
        return
    expected, pivots = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in A.rows]).rref()
    R, r, piv = rref(A)
    assert piv == list(pivots)
    got = [[Fraction(int(v.p), int(v.q)) for v in expected.row(i)] for i in range(A.nrows)]
    assert [list(row) for row in R.rows] == got
