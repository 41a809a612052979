"""
Tests for the exact sparse linear algebra layer.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from linalg import (
    SparseMatrix, SubspaceBasis, block_diagonal, certified_rank, connected_blocks, image_basis,
    inverse, kernel_basis, kron, modular_rank, quotient_dim, quotient_projection, rank, vec_add,
    vec_clean,
)
from shared.errors import SingularMatrix, ValidationError


def small_matrices(max_side: int = 6):
    """Dense integer matrices with entries in -3..3, mostly zero."""
    entry = st.sampled_from([0, 0, 0, 1, -1, 2, -3])
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)))


# === Vectors ===

def test_vec_add_drops_cancelled_entries():
    target = {0: Fraction(1), 1: Fraction(2)}
    vec_add(target, {0: Fraction(1), 2: Fraction(5)}, -1)
    assert target == {1: 2, 2: -5}


def test_vec_clean_coerces_and_drops_zeros():
    assert vec_clean({0: 0, 1: 3, 2: Fraction(0)}) == {1: Fraction(3)}


# === Matrices ===

def test_matmul_and_transpose():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[1, -2], [0, 1]])
    assert a @ b == SparseMatrix.identity(2)
    assert a.transpose().to_dense() == [[1, 0], [2, 1]]


def test_apply_matches_dense_product():
    m = SparseMatrix.from_dense([[1, 0, 2], [0, 3, 0]])
    assert m.apply({0: 1, 2: Fraction(1, 2)}) == {0: 2}


def test_entries_outside_shape_are_rejected():
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_block_diagonal_and_kron_ranks():
    a = SparseMatrix.from_dense([[1, 1], [1, 1]])
    b = SparseMatrix.identity(3)
    assert rank(block_diagonal([a, b])) == 4
    assert rank(kron(a, b)) == 3
    assert kron(a, b).shape == (6, 6)


def test_connected_blocks_partition_rows_and_columns():
    m = SparseMatrix(4, 4, {(0, 0): 1, (1, 0): 1, (2, 3): 1})
    assert connected_blocks(m) == [([0, 1], [0]), ([2], [3])]


# === Ranks ===

def test_rank_of_known_matrices():
    assert rank(SparseMatrix.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])) == 2
    assert rank(SparseMatrix(5, 7)) == 0
    assert rank(SparseMatrix.identity(5)) == 5


def test_large_rank_uses_block_elimination():
    # 70 x 70 identity with the last row replaced by the sum of two others
    n = 70
    entries = {(r, r): 1 for r in range(n - 1)}
    entries[(n - 1, 3)] = 1
    entries[(n - 1, 10)] = Fraction(1, 2)
    m = SparseMatrix(n, n, entries)
    assert rank(m) == n - 1
    assert certified_rank(m) == n - 1
    assert modular_rank(m) <= rank(m)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_agrees_with_sympy(data):
    m = SparseMatrix.from_dense(data)
    assert rank(m) == Matrix(data).rank()


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(data):
    m = SparseMatrix.from_dense(data)
    kernel = kernel_basis(m)
    assert rank(m) + kernel.dim == m.cols
    for v in kernel.vectors:
        assert m.apply(v) == {}


@settings(max_examples=40, deadline=None)
@given(small_matrices())
def test_certified_rank_is_exact(data):
    m = SparseMatrix.from_dense(data)
    assert certified_rank(m) == rank(m)
    assert modular_rank(m) <= rank(m)


# === Subspaces ===

def test_span_coordinates_and_membership():
    sub = SubspaceBasis.span([{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}], 3)
    assert sub.dim == 2
    assert sub.contains({0: 2, 1: 3, 2: 1})
    assert not sub.contains({0: 1})
    with pytest.raises(ValidationError):
        sub.coordinates({2: 1, 0: 5, 1: 0})


def test_span_rejects_out_of_range_vectors():
    with pytest.raises(ValidationError):
        SubspaceBasis.span([{3: 1}], 3)


def test_image_basis_dimension():
    m = SparseMatrix.from_dense([[1, 2], [2, 4], [0, 0]])
    assert image_basis(m).dim == 1


def test_quotient_projection_is_a_retraction():
    sub = SubspaceBasis.span([{0: 1, 2: 1}, {1: 1, 3: 2}], 4)
    proj, section = quotient_projection(sub, 4)
    assert quotient_dim(sub, 4) == 2
    assert proj @ section == SparseMatrix.identity(2)
    for v in sub.vectors:
        assert proj.apply(v) == {}


def test_inverse_roundtrip():
    m = SparseMatrix.from_dense([[2, 1, 0], [0, 1, 0], [1, 0, 1]])
    assert m @ inverse(m) == SparseMatrix.identity(3)


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(SingularMatrix):
        inverse(SparseMatrix.from_dense([[1, 2], [2, 4]]))
    with pytest.raises(SingularMatrix):
        inverse(SparseMatrix(2, 3))
