"""
Tests for Hochschild complexes, homology, cochains, homotopies and the dense oracle.
"""

import sys

import pytest

from algebra import cyclic_group, group_algebra, symmetric_group_3, zero_algebra
from bimodule import dual_bimodule, regular_bimodule, trivial_bimodule
from checks import FULL, REDUCED, right_splitting
from hochschild import (
    ChainComplex, bar_homotopy_check, chain_dims, dense_homology_dims, hochschild_cochain_complex,
    hochschild_complex, homology_dims, hunital_homotopy_check,
)
from linalg import SparseMatrix
from morita import homology_job
from shared.errors import AlgebraMismatch, BadSplitting, DiscrepancyError, SizeGuardError


def regular_homology(a, max_degree):
    return homology_dims(hochschild_complex(a, regular_bimodule(a, verify=False), max_degree))


# === Complexes ===

def test_chain_dims():
    assert chain_dims(2, 3, 3) == [2, 6, 18, 54]


def test_complex_is_a_complex(c2_sparse):
    a = c2_sparse.reduced_algebra
    c = hochschild_complex(a, regular_bimodule(a, verify=False), 2)
    assert c.spaces == (8, 64, 512)
    assert c.boundary(0).shape == (0, 8)
    c.check_square_zero()


def test_square_zero_violation_is_a_discrepancy():
    one = SparseMatrix.identity(1)
    with pytest.raises(DiscrepancyError):
        ChainComplex((1, 1, 1), (one, one))


def test_coefficients_must_live_over_the_algebra(matrix_units):
    other = group_algebra(cyclic_group(2))
    with pytest.raises(AlgebraMismatch):
        hochschild_complex(matrix_units.reduced_algebra, regular_bimodule(other), 1)


def test_chain_size_guard(matrix_units):
    a = matrix_units.reduced_algebra
    with pytest.raises(SizeGuardError):
        hochschild_complex(a, regular_bimodule(a), 3, cap=100)


# === Homology ===

def test_matrix_units_homology(matrix_units):
    report = regular_homology(matrix_units.reduced_algebra, 3)
    assert report.certified == [1, 0, 0]
    assert report.cohomology_dims == report.homology_dims
    assert report.truncated_top


@pytest.mark.parametrize('group, classes', [
    (cyclic_group(1), 1),
    (cyclic_group(2), 2),
    (cyclic_group(3), 3),
    (symmetric_group_3(), 3),
])
def test_hh0_of_group_algebra_counts_conjugacy_classes(group, classes):
    report = homology_job(group_algebra(group), 2)
    assert report.certified == [classes, 0]


def test_zero_algebra_has_homology_in_every_degree():
    a = zero_algebra(1)
    assert regular_homology(a, 3).certified == [1, 1, 1]


def test_trivial_coefficients_of_matrix_units(matrix_units):
    a = matrix_units.reduced_algebra
    report = homology_dims(hochschild_complex(a, trivial_bimodule(a), 3), cohomology=False)
    assert report.certified == [1, 0, 0]


def test_report_serializes_without_timings(matrix_units):
    data = regular_homology(matrix_units.reduced_algebra, 1).to_dict()
    assert 'timings' not in data
    assert data['homology_dims'][0] == 1


# === Cochains ===

def test_first_cohomology_with_dual_coefficients(matrix_units):
    a = matrix_units.reduced_algebra
    cochains = hochschild_cochain_complex(a, dual_bimodule(regular_bimodule(a)), 2)
    assert cochains.cohomology_dims()[:2] == [1, 0]


def test_cochain_size_guard(matrix_units):
    a = matrix_units.reduced_algebra
    with pytest.raises(SizeGuardError):
        hochschild_cochain_complex(a, dual_bimodule(regular_bimodule(a)), 3, cap=50)


# === Dense oracle ===

@pytest.mark.parametrize('fixture', [
    'matrix_units',
    'rectangular_band',
    'gzero',
    pytest.param('c2_sparse', marks=pytest.mark.slow),
    pytest.param('groupoid_derived', marks=pytest.mark.slow),
])
@pytest.mark.parametrize('full', [False, True])
def test_dense_oracle_agrees_with_sparse_pipeline(fixture, full, request):
    s = request.getfixturevalue(fixture)
    a = s.full_algebra if full else s.reduced_algebra
    x = regular_bimodule(a, verify=False)
    sparse = homology_dims(hochschild_complex(a, x, 3)).homology_dims[:3]
    assert dense_homology_dims(a, x, 2) == sparse


def test_dense_oracle_size_guard(c3_sparse):
    a = c3_sparse.reduced_algebra
    with pytest.raises(SizeGuardError):
        dense_homology_dims(a, regular_bimodule(a, verify=False), 1)


# === Homotopies ===

def test_bar_homotopy(matrix_units, c2_sparse):
    for s, degree in ((matrix_units, 2), (c2_sparse, 1)):
        a = s.reduced_algebra
        result = bar_homotopy_check(a, regular_bimodule(a, verify=False), degree)
        assert result
        assert result.degrees == tuple(range(-1, degree + 1))
        assert result.violation is None


def test_bar_homotopy_size_guard(c2_sparse):
    a = c2_sparse.reduced_algebra
    with pytest.raises(SizeGuardError):
        bar_homotopy_check(a, regular_bimodule(a, verify=False), 3, cap=1000)


def test_hunital_homotopy(matrix_units, rectangular_band):
    for s in (matrix_units, rectangular_band):
        result = hunital_homotopy_check(s.reduced_algebra, right_splitting(s, REDUCED), 3)
        assert result
        assert result.chains_checked == 4 + 16 + 64


def _algebra(s, which):
    return s.full_algebra if which == FULL else s.reduced_algebra


@pytest.mark.parametrize('which', [REDUCED, FULL])
@pytest.mark.parametrize('fixture', [
    'matrix_units',
    'rectangular_band',
    'gzero',
    pytest.param('c2_sparse', marks=pytest.mark.slow),
    pytest.param('groupoid_derived', marks=pytest.mark.slow),
])
def test_hunital_homotopy_to_degree_four(fixture, which, request):
    s = request.getfixturevalue(fixture)
    a = _algebra(s, which)
    result = hunital_homotopy_check(a, right_splitting(s, which), 4, cap=sys.maxsize)
    assert result, result.violation
    assert result.degrees == (1, 2, 3, 4)
    assert result.chains_checked == sum(a.dim ** n for n in range(1, 5))


@pytest.mark.parametrize('which', [REDUCED, pytest.param(FULL, marks=pytest.mark.slow)])
@pytest.mark.parametrize('fixture', ['gzero', 'matrix_units', 'rectangular_band'])
def test_bar_homotopy_to_degree_four(fixture, which, request):
    a = _algebra(request.getfixturevalue(fixture), which)
    result = bar_homotopy_check(a, regular_bimodule(a, verify=False), 4, cap=sys.maxsize)
    assert result, result.violation
    assert result.degrees == (-1, 0, 1, 2, 3, 4)
    assert result.violation is None


def test_hunital_homotopy_rejects_non_splittings():
    a = group_algebra(cyclic_group(2))
    with pytest.raises(BadSplitting):
        hunital_homotopy_check(a, {}, 1)
