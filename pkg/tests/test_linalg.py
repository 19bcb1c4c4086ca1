from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from skewcat.linalg import (
    EchelonBasis,
    FieldMismatch,
    LinAlgError,
    Matrix,
    PrimeField,
    RationalField,
    field_from_spec,
    kernel_basis,
    quotient_dim,
    rank,
)

Q = RationalField()
F101 = PrimeField(101)
FIELDS = [Q, F101]


def M(field, rows):
    return Matrix.from_rows(field, [[field.parse(v) for v in r] for r in rows])


@pytest.mark.parametrize("field", FIELDS)
def test_rank_identity_and_zero(field):
    assert Matrix.identity(field, 2).rank() == 2
    assert Matrix.zeros(field, 3, 3).rank() == 0


def test_rank_dependent_rows():
    # row 2 = 2*row 1
    assert M(Q, [[1, 2], [2, 4]]).rank() == 1
    assert M(F101, [[1, 2], [2, 4]]).rank() == 1


@pytest.mark.parametrize("field", FIELDS)
def test_kernel_identity_empty(field):
    assert kernel_basis(Matrix.identity(field, 2)) == []


def test_kernel_difference_vector():
    ker = kernel_basis(M(Q, [[1, -1]]))
    assert len(ker) == 1
    assert list(ker[0]) == [Fraction(1), Fraction(1)]


def test_kernel_dependent_columns():
    ker = kernel_basis(M(Q, [[1, 2], [2, 4]]))
    assert len(ker) == 1
    v = ker[0]
    # proportional to (2, -1): check it kills the matrix
    assert v[0] * 1 + v[1] * 2 == 0
    assert v[0] * 2 + v[1] * 4 == 0


def test_quotient_dim_examples():
    assert quotient_dim(Q, 4, []) == 4
    e = [Matrix.identity(Q, 3).col(j) for j in range(3)]
    assert quotient_dim(Q, 3, e) == 0
    e1 = Matrix.identity(Q, 4).col(0)
    e2 = Matrix.identity(Q, 4).col(0) + Matrix.identity(Q, 4).col(1)
    assert quotient_dim(Q, 4, [e1, e2]) == 2
    with pytest.raises(LinAlgError):
        quotient_dim(Q, 4, [Matrix.identity(Q, 3).col(0)])


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        Matrix.identity(Q, 2) @ Matrix.identity(F101, 2)


def test_field_parsing():
    assert Q.parse("3/4") == Fraction(3, 4)
    assert Q.parse("-2") == Fraction(-2)
    assert F101.parse("-1") == 100
    assert F101.parse(205) == 3
    with pytest.raises(LinAlgError):
        F101.parse("1/2")
    with pytest.raises(LinAlgError):
        PrimeField(100)
    assert field_from_spec("rational") == Q
    assert field_from_spec("p:101") == F101


def test_solve_and_inconsistency():
    a = M(Q, [[1, 0], [0, 1], [1, 1]])
    b = M(Q, [[1], [2], [3]])
    x = a.solve(b)
    assert a @ x == b
    bad = M(Q, [[1], [2], [4]])
    with pytest.raises(LinAlgError):
        a.solve(bad)


small_entries = st.integers(min_value=-6, max_value=6)


@st.composite
def int_matrix(draw, max_dim=5):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = draw(st.integers(min_value=1, max_value=max_dim))
    rows = draw(
        st.lists(
            st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
    return rows


@settings(max_examples=60, deadline=None)
@given(rows=int_matrix(), fid=st.integers(min_value=0, max_value=1))
def test_rank_transpose_and_nullity(rows, fid):
    field = FIELDS[fid]
    m = M(field, rows)
    r = m.rank()
    assert r == m.transpose().rank()
    ker = m.kernel_basis()
    assert m.cols == r + len(ker)
    for v in ker:
        prod = m @ Matrix.from_columns(field, m.cols, [v])
        assert prod.is_zero()


@settings(max_examples=40, deadline=None)
@given(rows=int_matrix(), fid=st.integers(min_value=0, max_value=1), seed=st.integers(0, 10**6))
def test_rank_invariant_under_permutation(rows, fid, seed):
    import random

    field = FIELDS[fid]
    m = M(field, rows)
    rng = random.Random(seed)
    perm_r = list(range(len(rows)))
    perm_c = list(range(len(rows[0])))
    rng.shuffle(perm_r)
    rng.shuffle(perm_c)
    shuffled = [[rows[i][j] for j in perm_c] for i in perm_r]
    assert M(field, shuffled).rank() == m.rank()


@settings(max_examples=30, deadline=None)
@given(rows=int_matrix(max_dim=4), rows2=int_matrix(max_dim=4))
def test_composable_zero_product_rank_bound(rows, rows2):
    # for a·b = 0, rank a + rank b <= inner dimension
    a = M(Q, rows)
    b0 = M(Q, rows2)
    # build b with columns in the kernel of a so that a·b = 0
    ker = a.kernel_basis()
    if not ker:
        return
    b = Matrix.from_columns(Q, a.cols, ker)
    assert (a @ b).is_zero()
    assert a.rank() + b.rank() <= a.cols


@pytest.mark.parametrize("field", FIELDS)
def test_echelon_basis_quotient_and_kernel(field):
    one = field.one
    eb = EchelonBasis(field, 4)
    assert eb.add({0: one})
    assert eb.add({0: one, 1: one})
    assert not eb.add({1: one})  # dependent
    assert eb.rank == 2
    assert eb.free_coords() == [2, 3]
    P, S = eb.quotient_maps()
    assert (P @ S) == Matrix.identity(field, 2)
    # P kills the span
    span = Matrix.from_columns(field, 4, [[one, 0, 0, 0], [one, one, 0, 0]])
    assert (P @ Matrix(field, field.reduce_array(span.a))).is_zero()
    # kernel of the same rows read as constraints
    V = eb.kernel_matrix()
    for pc, row in eb.rows.items():
        rowvec = field.empty((1, 4))
        for k, c in row.items():
            rowvec[0, k] = c
        assert (Matrix(field, rowvec) @ V).is_zero()
