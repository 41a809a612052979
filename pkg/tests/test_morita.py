"""
Tests for the Morita witness, the functors Phi and Gamma, and the invariance harness.
"""

import pytest

from bimodule import inducedness_check, regular_bimodule, trivial_bimodule
from morita import (
    COLUMNS, build_witness, choice_independence, column_algebras, compatibility_check,
    corner_compatibility, gamma, invariance_harness, multiplication_ranks, phi, preserves_inducedness,
    rebase, reverse_roundtrip_check, roundtrip_check, valid_positions, witness_table,
)
from rees import witness_idempotent
from shared.errors import NotInduced, ZeroSandwichEntry


# === Witness ===

def test_matrix_units_witness_dimensions(matrix_units):
    w = build_witness(matrix_units, 0, 0)
    assert w.dims() == {'A': 4, 'P': 2, 'Q': 2, 'B': 1, 'P_tensor_Q': 1, 'Q_tensor_P': 4}
    assert w.pq_iso.is_isomorphism()
    assert w.qp_iso.is_isomorphism()
    assert multiplication_ranks(w) == {'P_tensor_Q_to_B': 1, 'Q_tensor_P_to_A': 4}


def test_c2_witness_dimensions(c2_sparse):
    w = build_witness(c2_sparse, 0, 1)
    assert w.dims() == {'A': 8, 'P': 4, 'Q': 4, 'B': 2, 'P_tensor_Q': 2, 'Q_tensor_P': 8}
    assert w.psi.shape == (2, 2)
    assert (w.psi @ w.psi_inverse).to_dense() == [[1, 0], [0, 1]]


def test_witness_at_zero_entry_raises(c3_sparse):
    with pytest.raises(ZeroSandwichEntry):
        build_witness(c3_sparse, 0, 1)


def test_compatibility(c2_sparse, matrix_units):
    assert compatibility_check(build_witness(c2_sparse, 0, 0))
    s = matrix_units
    assert corner_compatibility(s.reduced_algebra, witness_idempotent(s, 1, 1))


# === Functors ===

def test_functor_dimensions(c2_sparse, gzero, groupoid_derived):
    for s in (c2_sparse, gzero, groupoid_derived):
        w = build_witness(s, 0, 0)
        assert phi(w, regular_bimodule(w.algebra, verify=False)).dim == s.group.order
        assert gamma(w, regular_bimodule(w.group_algebra, verify=False)).dim == s.nonzero_size


def test_phi_result_is_a_group_algebra_bimodule(c2_sparse):
    w = build_witness(c2_sparse, 0, 0)
    y = phi(w, regular_bimodule(w.algebra, verify=False))
    assert y.left_algebra is w.group_algebra
    y.check_axioms()


def test_rebase_roundtrip(c2_sparse):
    w = build_witness(c2_sparse, 0, 1)
    b_module = regular_bimodule(w.B)
    there = rebase(b_module, w, to_group=True)
    back = rebase(there, w, to_group=False)
    assert back.left_action == b_module.left_action
    assert back.right_action == b_module.right_action


def test_roundtrips(matrix_units, c2_sparse):
    for s in (matrix_units, c2_sparse):
        w = build_witness(s, 0, 0)
        forward = roundtrip_check(w, regular_bimodule(w.algebra, verify=False))
        assert forward
        assert forward.details['evaluation_rank'] == s.nonzero_size
        backward = reverse_roundtrip_check(w, regular_bimodule(w.group_algebra, verify=False))
        assert backward
        assert backward.details['module_dim'] == s.group.order


def test_roundtrip_requires_induced_module(matrix_units):
    w = build_witness(matrix_units, 0, 0)
    with pytest.raises(NotInduced):
        roundtrip_check(w, trivial_bimodule(w.algebra))


def test_phi_preserves_inducedness(c3_sparse):
    w = build_witness(c3_sparse, 0, 0)
    x = regular_bimodule(w.algebra, verify=False)
    assert inducedness_check(x)
    assert preserves_inducedness(w, x)
    # non-induced input is vacuous
    assert preserves_inducedness(w, trivial_bimodule(w.algebra))


# === Choice independence ===

def test_valid_positions(c2_sparse):
    assert valid_positions(c2_sparse) == [(0, 0), (0, 1), (1, 1)]


def test_choice_independence(c2_sparse, matrix_units):
    result = choice_independence(c2_sparse)
    assert result['positions'] == [[1, 1], [1, 2], [2, 2]]
    assert result['table']['phi_regular'] == 2
    assert result['table']['gamma_group_algebra'] == 8

    assert witness_table(matrix_units, 0, 0) == witness_table(matrix_units, 1, 1)


# === Invariance harness ===

def test_column_algebras(matrix_units):
    algebras = column_algebras(matrix_units)
    assert tuple(algebras) == COLUMNS
    assert [a.dim for a in algebras.values()] == [4, 1, 5, 5, 6]


def test_matrix_units_table(matrix_units):
    table = invariance_harness(matrix_units, 3)
    assert table.columns['A(S)'].certified == [1, 0, 0]
    assert table.homology_row(0) == {'A(S)': 1, 'Q[G]': 1, 'l1(S)': 2, 'A(S)#': 2, 'l1(S)#': 3}
    for n in (1, 2):
        assert set(table.homology_row(n).values()) == {0}
    assert table.certified_degrees == [0, 1, 2]
    assert any('degree 0 differs' in note for note in table.reported)
    assert table.witness['position'] == [1, 1]
    assert table.witness['B'] == 1


def test_group_with_zero_table(gzero):
    table = invariance_harness(gzero, 2, witness=False)
    assert table.homology_row(0) == {'A(S)': 3, 'Q[G]': 3, 'l1(S)': 4, 'A(S)#': 4, 'l1(S)#': 5}
    assert table.witness == {}


@pytest.mark.parametrize('fixture, classes', [
    ('rectangular_band', 1),
    ('c2_sparse', 2),
    ('c3_sparse', 3),
    ('groupoid_derived', 2),
    ('klein_table', 4),
])
def test_hh0_matches_group_algebra(fixture, classes, request):
    s = request.getfixturevalue(fixture)
    table = invariance_harness(s, 2, witness=False)
    assert table.columns['A(S)'].homology_dims[:2] == table.columns['Q[G]'].homology_dims[:2]
    assert table.homology_row(0)['A(S)'] == classes
    assert table.homology_row(1) == {name: 0 for name in COLUMNS}


def test_s3_degree_one(s3_sandwich):
    table = invariance_harness(s3_sandwich, 1, witness=False)
    assert table.homology_row(0)['A(S)'] == 3
    assert table.columns['Q[G]'].certified == [3]


@pytest.mark.slow
def test_s3_degree_two(s3_sandwich):
    table = invariance_harness(s3_sandwich, 2)
    assert table.columns['A(S)'].certified == [3, 0]
    assert table.witness['phi_regular'] == 6


def test_table_serialization(matrix_units):
    data = invariance_harness(matrix_units, 2, witness=False).to_dict()
    assert data['certified_degrees'] == [0, 1]
    assert data['truncated_degree'] == 2
    assert list(data['homology']) == list(COLUMNS)
    assert data['assertions'][0]['columns'] == ['A(S)', 'Q[G]']
