"""
Tests for bimodules, balanced tensors, corners and reduction.
"""

import pytest

from algebra import cyclic_group, group_algebra, zero_algebra
from bimodule import (
    Bimodule, BimoduleMap, augmentation_bimodule, balanced_tensor, corner_modules, dual_bimodule,
    inducedness_check, one_dimensional_bimodule, reduce_module, regular_bimodule, trivial_bimodule,
)
from linalg import SparseMatrix
from rees import ReesElement, witness_idempotent
from shared.errors import ActionAxiomError, AlgebraMismatch, NotIdempotent


@pytest.fixture
def qc2():
    return group_algebra(cyclic_group(2))


def test_regular_bimodule_satisfies_axioms(matrix_units):
    x = regular_bimodule(matrix_units.reduced_algebra)
    assert x.dim == 4
    x.check_axioms()


def test_action_matrix_shape_is_checked(qc2):
    with pytest.raises(ActionAxiomError):
        Bimodule(qc2, qc2, 2, [SparseMatrix.identity(2)], [SparseMatrix.identity(2)] * 2)


def test_bad_character_is_rejected(qc2):
    with pytest.raises(ActionAxiomError):
        one_dimensional_bimodule(qc2, [1, 2], [1, 1])


def test_augmentation_and_dual_modules(qc2):
    aug = augmentation_bimodule(qc2)
    assert aug.act_left({1: 1}, {0: 1}) == {0: 1}
    dual = dual_bimodule(regular_bimodule(qc2))
    dual.check_axioms()
    assert dual.left_algebra is qc2 and dual.dim == 2


def test_bimodule_map_must_intertwine(qc2):
    x = regular_bimodule(qc2)
    with pytest.raises(ActionAxiomError):
        BimoduleMap(x, x, SparseMatrix(2, 2, {(0, 0): 1}))
    identity = BimoduleMap(x, x, SparseMatrix.identity(2))
    assert identity.is_isomorphism()


# === Balanced tensors ===

def test_tensor_over_unital_algebra_is_the_module(qc2):
    x = regular_bimodule(qc2)
    t = balanced_tensor(x, x)
    assert t.dim == 2
    i, j = t.lift(0)
    assert t.project(i, j) == {0: 1}


def test_tensor_over_zero_algebra_has_no_relations():
    z = zero_algebra(2)
    x = regular_bimodule(z)
    t = balanced_tensor(x, x)
    assert t.dim == 4
    assert t.relations_rank == 0


def test_tensor_needs_matching_algebras(qc2):
    other = group_algebra(cyclic_group(2))
    with pytest.raises(AlgebraMismatch):
        balanced_tensor(regular_bimodule(qc2), regular_bimodule(other))


def test_inducedness(matrix_units, rectangular_band):
    assert inducedness_check(regular_bimodule(matrix_units.reduced_algebra))
    assert inducedness_check(regular_bimodule(rectangular_band.reduced_algebra))
    witness = inducedness_check(trivial_bimodule(matrix_units.reduced_algebra))
    assert not witness
    assert witness.rank == 0


# === Corners ===

def test_corner_dimensions(matrix_units, c2_sparse):
    e = witness_idempotent(matrix_units, 0, 0)
    p, q, b = corner_modules(matrix_units.reduced_algebra, e)
    assert (p.dim, q.dim, b.dim) == (2, 2, 1)

    e = witness_idempotent(c2_sparse, 0, 1)
    corners = corner_modules(c2_sparse.reduced_algebra, e)
    assert (corners.P.dim, corners.Q.dim, corners.B.dim) == (4, 4, 2)
    assert corners.B.unit_element() is not None


def test_corner_of_non_idempotent_raises(c2_sparse):
    s = c2_sparse
    a = s.reduced_algebra
    x = a.basis_element(s.index(ReesElement(0, s.group.index_of('a'), 0)))
    with pytest.raises(NotIdempotent):
        corner_modules(a, x)


# === Reduction ===

def test_reduction_of_regular_module_is_regular(c2_sparse):
    s = c2_sparse
    reduced = reduce_module(regular_bimodule(s.full_algebra), s.zero_index, s.reduced_algebra)
    expected = regular_bimodule(s.reduced_algebra)
    assert reduced.dim == s.nonzero_size
    assert reduced.left_action == expected.left_action
    assert reduced.right_action == expected.right_action
