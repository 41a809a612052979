"""
Tests for the structural checks: splittings, biprojectivity and amenability.
"""

import pytest

from algebra import cyclic_group, group_algebra, unitize, zero_algebra
from checks import (
    COMPUTED, CONSTRUCTIVE, FULL, NAIVE, REDUCED, act_left_on_tensor, act_right_on_tensor,
    biprojective_diagonal, biprojectivity_check, corner_projectivity_check, direct_first_cohomology,
    four_algebras, group_diagonal_check, left_splitting, projectivity_check, right_splitting,
    self_induced_check, splitting_report, tensor_multiply, trivial_coefficients_check,
    weak_amenability_check,
)
from hochschild import check_splitting
from shared.errors import BadSplitting, ValidationError, ZeroSandwichEntry


# === Tensor helpers ===

def test_tensor_actions_on_group_algebra():
    a = group_algebra(cyclic_group(2))
    # e (x) a
    t = {0 * 2 + 1: 1}
    assert tensor_multiply(a, t) == {1: 1}
    assert act_left_on_tensor(a, 1, t) == {1 * 2 + 1: 1}
    assert act_right_on_tensor(a, t, 1) == {0 * 2 + 0: 1}


# === Splittings ===

@pytest.mark.parametrize('which', [REDUCED, FULL])
def test_splittings_are_module_maps(which, matrix_units, c2_sparse, rectangular_band):
    for s in (matrix_units, c2_sparse, rectangular_band):
        a = s.full_algebra if which == FULL else s.reduced_algebra
        check_splitting(a, right_splitting(s, which), 'right')
        check_splitting(a, left_splitting(s, which), 'left')


def test_naive_full_splitting_fails(matrix_units):
    s = matrix_units
    with pytest.raises(BadSplitting):
        check_splitting(s.full_algebra, right_splitting(s, NAIVE), 'right')
    report = splitting_report(s.full_algebra, right_splitting(s, NAIVE), 'right', s.name)
    assert not report
    assert 'module map' in report.details['violation']


def test_unknown_splitting_variant(matrix_units):
    with pytest.raises(ValidationError):
        right_splitting(matrix_units, 'other')
    with pytest.raises(ValidationError):
        left_splitting(matrix_units, NAIVE)


def test_projectivity_check(c3_sparse):
    report = projectivity_check(c3_sparse)
    assert report
    assert report.label == CONSTRUCTIVE
    assert set(report.details) == {
        'A(c3-sparse-sandwich)_right', 'A(c3-sparse-sandwich)_left',
        'l1(c3-sparse-sandwich)_right', 'l1(c3-sparse-sandwich)_left',
    }


def test_corner_projectivity(c2_sparse):
    for i, lam in [(0, 0), (0, 1), (1, 1)]:
        report = corner_projectivity_check(c2_sparse, i, lam)
        assert report, report.details
        assert report.details['dim_P'] == 4
        assert report.details['dim_B'] == 2


# === Biprojectivity ===

def test_biprojectivity(c2_sparse, c3_sparse, groupoid_derived):
    for s in (c2_sparse, c3_sparse, groupoid_derived):
        report = biprojectivity_check(s)
        assert report, report.details
        assert report.details['terms_per_image'] == s.group.order
        assert report.details['pairs_checked'] == s.nonzero_size ** 2


def test_biprojectivity_at_every_position(c2_sparse):
    for position in [(0, 0), (0, 1), (1, 1)]:
        assert biprojectivity_check(c2_sparse, position)


def test_unnormalized_diagonal_is_off_by_group_order(c2_sparse):
    report = biprojectivity_check(c2_sparse, normalize=False)
    assert not report
    assert report.details['failed'] == 'splitting'
    assert report.details['factor'] == '2'


def test_diagonal_needs_nonzero_entry(c2_sparse):
    with pytest.raises(ZeroSandwichEntry):
        biprojective_diagonal(c2_sparse, 1, 0)


def test_group_diagonal(c2_sparse, klein_table):
    for s in (c2_sparse, klein_table):
        report = group_diagonal_check(s)
        assert report
        assert report.details['group_order'] == s.group.order


# === Amenability ===

def test_self_induced(matrix_units, rectangular_band):
    for s in (matrix_units, rectangular_band):
        assert self_induced_check(s.reduced_algebra)
        assert self_induced_check(s.full_algebra)


def test_zero_algebra_is_not_self_induced():
    report = self_induced_check(zero_algebra(1))
    assert not report
    assert report.details['multiplication_rank'] == 0
    assert report.label == COMPUTED


def test_four_algebras(matrix_units):
    assert [a.dim for a in four_algebras(matrix_units).values()] == [4, 5, 5, 6]


@pytest.mark.parametrize('fixture', [
    'matrix_units',
    'c2_sparse',
    'rectangular_band',
    'gzero',
    'c3_sparse',
    'groupoid_derived',
    'klein_table',
    pytest.param('s3_sandwich', marks=pytest.mark.slow),
])
def test_weak_amenability(fixture, request):
    report = weak_amenability_check(request.getfixturevalue(fixture))
    assert report, report.details
    for entry in report.details['dims'].values():
        assert entry['H^1_dual'] == 0
    assert report.details['dims']['A(S)']['H^1_direct'] == 0


def test_direct_first_cohomology():
    a = group_algebra(cyclic_group(3))
    assert direct_first_cohomology(a) == 0
    assert direct_first_cohomology(unitize(a)) == 0


def test_trivial_coefficients(matrix_units, rectangular_band):
    for s in (matrix_units, rectangular_band):
        assert trivial_coefficients_check(s.reduced_algebra)
        assert trivial_coefficients_check(s.full_algebra)


def test_trivial_coefficients_detect_zero_products():
    report = trivial_coefficients_check(zero_algebra(1))
    assert not report
    assert report.details['nonzero'] == {1: 1, 2: 1}
