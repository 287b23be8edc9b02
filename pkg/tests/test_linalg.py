from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix

from syzrank import GF, QQ
from syzrank.linalg import RowEchelon, integer_inverse, left_kernel, nullspace, rank, transpose
from syzrank.syzygy import ScalarMatrix

matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda r: st.integers(min_value=1, max_value=6).flatmap(
        lambda c: st.lists(st.lists(st.integers(min_value=-3, max_value=3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_examples():
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[1, 2], [2, 4]]) == 1
    assert ScalarMatrix(((1, 2), (2, 4)), 2, QQ).rank() == 1


def test_rank_mod_p_can_drop():
    assert rank([[1, 2], [3, 1]]) == 2
    assert rank([[1, 2], [3, 1]], GF(5)) == 1


@given(matrices)
def test_rank_matches_sympy(rows):
    assert rank(rows) == Matrix(rows).rank()


@given(matrices)
def test_rank_of_transpose(rows):
    assert rank(rows) == rank(transpose(rows, len(rows[0])))


@given(matrices)
def test_nullspace(rows):
    ncols = len(rows[0])
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - rank(rows)
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in rows)


@given(matrices)
def test_left_kernel(rows):
    kernel = left_kernel(rows, len(rows))
    assert len(kernel) == len(rows) - rank(rows)
    for v in kernel:
        for j in range(len(rows[0])):
            assert sum(v[i] * rows[i][j] for i in range(len(rows))) == 0


def test_row_echelon_contains():
    ech = RowEchelon()
    assert ech.add([1, 2, 3]) and ech.add([0, 1, 1])
    assert not ech.add([1, 3, 4])
    assert ech.contains([2, 5, 7]) and not ech.contains([0, 0, 1])


def test_integer_inverse():
    inv = integer_inverse([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
