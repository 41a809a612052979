"""
Tests for Rees semigroups, their algebras and the groupoid sandwich.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra import cyclic_group, symmetric_group_3
from rees import (
    ZERO_NAME, ReesElement, block_decomposition, default_position, e_position, f_position, groupoid_sandwich,
    idempotent_e, idempotent_f, rees_mul, rees_new, witness_idempotent,
)
from shared.errors import BadShape, EmptyColumn, EmptyRow, RangeMismatch, SizeGuardError, ZeroSandwichEntry


def test_sizes_and_indexing(c2_sparse):
    s = c2_sparse
    assert s.nonzero_size == 8
    assert s.size == 9
    assert s.elements()[-1] is None
    for k in range(s.size):
        assert s.index(s.element(k)) == k


def test_product_rule(c2_sparse):
    s = c2_sparse
    a = s.group.index_of('a')
    x = ReesElement(0, a, 1)   # (1, a, 2)
    y = ReesElement(0, 0, 0)   # (1, e, 1)
    # p(lambda=2, i=1) = a, so (1, a, 2)(1, e, 1) = (1, a*a*e, 1) = (1, e, 1)
    assert s.mul(x, y) == ReesElement(0, 0, 0)
    # p(lambda=1, i=2) = o
    assert s.mul(ReesElement(0, 0, 0), ReesElement(1, 0, 0)) is None
    assert s.mul(None, x) is None


def test_rees_mul(c2_sparse):
    s = c2_sparse
    a = s.group.index_of('a')
    one = ReesElement(0, 0, 0)
    assert rees_mul(s, one, one) == one
    assert rees_mul(s, one, ReesElement(1, 0, 1)) is None
    assert rees_mul(s, ReesElement(0, a, 1), ReesElement(0, 0, 1)) == ReesElement(0, 0, 1)
    assert rees_mul(s, one, None) is None


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_table_matches_elementwise_product(data):
    g = symmetric_group_3()
    s = rees_new(g, 2, 2, ((0, 1), (4, None)), 'S3')
    a = data.draw(st.integers(0, s.size - 1))
    b = data.draw(st.integers(0, s.size - 1))
    assert s.mul_index(a, b) == s.index(s.mul(s.element(a), s.element(b)))


def test_element_names_are_one_based(matrix_units):
    names = matrix_units.element_names
    assert names[0] == '(1, e, 1)'
    assert names[-1] == ZERO_NAME


def test_algebra_dimensions(c3_sparse):
    assert c3_sparse.reduced_algebra.dim == 12
    assert c3_sparse.full_algebra.dim == 13
    assert c3_sparse.full_algebra.name == 'l1(c3-sparse-sandwich)'


def test_zero_is_absorbing_in_full_algebra(c2_sparse):
    a = c2_sparse.full_algebra
    z = c2_sparse.zero_index
    for k in range(a.dim):
        assert a.basis_product(k, z) == {z: 1}
        assert a.basis_product(z, k) == {z: 1}


@pytest.mark.parametrize('sandwich, error', [
    (((0, None), (None, None)), EmptyRow),
    (((0, None), (0, None)), EmptyColumn),
    (((0,), (0,)), BadShape),
    (((0, 5), (0, 0)), BadShape),
    (((True, None), (0, 0)), BadShape),
    (((0, 1.0), (0, 0)), BadShape),
])
def test_invalid_sandwiches(sandwich, error):
    with pytest.raises(error):
        rees_new(cyclic_group(2), 2, 2, sandwich)


def test_numpy_integer_sandwich_entries():
    s = rees_new(cyclic_group(2), 2, 2, ((np.int64(0), None), (np.int32(1), np.int64(0))))
    assert s.sandwich == ((0, None), (1, 0))
    assert all(type(p) is int for row in s.sandwich for p in row if p is not None)


def test_instance_size_guard():
    g = symmetric_group_3()
    sandwich = tuple(tuple(0 for _ in range(30)) for _ in range(30))
    with pytest.raises(SizeGuardError):
        rees_new(g, 30, 30, sandwich)


def test_distinguished_idempotents(c3_sparse):
    s = c3_sparse
    for i in range(s.i_size):
        e = idempotent_e(s, i)
        assert e.is_idempotent()
        assert e_position(s, i).i == i
        # e_i is a left unit on iS
        for x in s.elements():
            if x is not None and x.i == i:
                k = s.index(x)
                assert s.reduced_algebra.mul_vectors(e.coords, {k: 1}) == {k: 1}
    for lam in range(s.lambda_size):
        f = idempotent_f(s, lam)
        assert f.is_idempotent()
        assert f_position(s, lam).lam == lam


def test_witness_idempotent_needs_nonzero_entry(c3_sparse):
    # c3-sparse-sandwich has p(lambda=2, i=1) = o
    with pytest.raises(ZeroSandwichEntry):
        witness_idempotent(c3_sparse, 0, 1)
    assert witness_idempotent(c3_sparse, 0, 0, full=True).is_idempotent()


def test_default_position(c3_sparse):
    assert default_position(c3_sparse) == (0, 0)


def test_block_isomorphism_is_multiplicative(c2_sparse):
    s = c2_sparse
    blocks = block_decomposition(s)
    a = s.reduced_algebra
    g = s.group
    for (i, lam) in [(0, 0), (0, 1), (1, 1)]:
        iso = blocks.isomorphism(i, lam)
        for x in range(g.order):
            for y in range(g.order):
                assert a.basis_product(iso[x], iso[y]) == {iso[g.mul(x, y)]: 1}
    with pytest.raises(ZeroSandwichEntry):
        blocks.isomorphism(1, 0)


def test_groupoid_sandwich():
    g = cyclic_group(2)
    rows = groupoid_sandwich(2, [0, 1], [0, 1], g, [0, 1], [0, 0])
    assert rows == ((0, None), (None, 1))


def test_groupoid_sandwich_range_mismatch():
    g = cyclic_group(2)
    with pytest.raises(RangeMismatch):
        groupoid_sandwich(2, [0, 0], [0, 1], g, [0, 0], [0, 0])
