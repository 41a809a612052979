"""
Tests for groups and finite-dimensional algebras.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algebra import (
    FiniteAlgebra, cyclic_group, direct_sum, group_algebra, group_from_table, klein_four_group,
    quotient_algebra, symmetric_group_3, unitize, zero_algebra,
)
from linalg import SubspaceBasis
from shared.errors import AlgebraMismatch, BadShape, NoIdentity, NoInverse, NotAnIdeal, NotAssociative


# === Groups ===

def test_cyclic_group_names_and_inverses():
    g = cyclic_group(3)
    assert g.element_names == ('e', 'a', 'a^2')
    assert g.inv(g.index_of('a')) == g.index_of('a^2')
    assert g.is_abelian()


def test_index_of_accepts_digits_and_rejects_unknown_names():
    g = cyclic_group(2)
    assert g.index_of('1') == 1
    with pytest.raises(KeyError):
        g.index_of('b')


@pytest.mark.parametrize('group, classes', [
    (cyclic_group(1), 1),
    (cyclic_group(2), 2),
    (cyclic_group(3), 3),
    (symmetric_group_3(), 3),
    (klein_four_group(), 4),
])
def test_conjugacy_class_counts(group, classes):
    assert len(group.conjugacy_classes()) == classes


def test_symmetric_group_is_not_abelian():
    g = symmetric_group_3()
    assert not g.is_abelian()
    r = g.index_of('(123)')
    assert g.mul(g.mul(r, r), r) == g.identity


def test_table_without_identity_is_rejected():
    with pytest.raises(NoIdentity):
        group_from_table([[0, 0], [0, 0]])


def test_table_without_inverses_is_rejected():
    # {0, 1} under max: identity 0, but 1 has no inverse
    with pytest.raises(NoInverse):
        group_from_table([[0, 1], [1, 1]])


def test_non_associative_table_is_rejected():
    # a Latin square with identity 0 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        group_from_table(table)


def test_ragged_table_is_rejected():
    with pytest.raises(BadShape):
        group_from_table([[0, 1], [1]])


# === Algebras ===

def test_group_algebra_is_unital_and_commutative_for_abelian_groups():
    a = group_algebra(cyclic_group(3))
    assert a.dim == 3
    assert a.unit_element() == a.basis_element(0)
    assert a.is_commutative()
    assert not group_algebra(symmetric_group_3()).is_commutative()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_group_algebra_multiplication_is_associative(x, y, z):
    a = group_algebra(symmetric_group_3())
    u, v, w = (a.element(dict(enumerate(c))) for c in (x, y, z))
    assert (u * v) * w == u * (v * w)


def test_non_associative_structure_constants_are_rejected():
    # e0*e0 = e1 and e0*e1 = 0 but e1*e0 = e1: (e0 e0) e0 = e1, e0 (e0 e0) = 0
    with pytest.raises(NotAssociative):
        FiniteAlgebra(2, {(0, 0): {1: 1}, (1, 0): {1: 1}})


def test_unitization_adds_a_new_unit_even_when_unital():
    a = group_algebra(cyclic_group(2))
    u = unitize(a)
    assert u.dim == 3
    assert u.name == 'Q[G]#'
    assert u.basis_names[-1] == '1'
    assert u.unit_element() == u.basis_element(2)


def test_direct_sum_products_do_not_mix():
    a = group_algebra(cyclic_group(2))
    s = direct_sum(a, zero_algebra(1))
    assert s.dim == 3
    assert s.basis_product(0, 2) == {}
    assert s.unit is None


def test_multiply_extends_bilinearly():
    a = group_algebra(cyclic_group(2))
    e, g = a.basis_element(0), a.basis_element(1)
    assert (e + g).multiply(e - g).is_zero()
    assert a.unit_element().multiply(g) == g
    assert g.multiply(g) == e


def test_elements_of_different_algebras_do_not_multiply():
    a = group_algebra(cyclic_group(2))
    b = group_algebra(cyclic_group(2))
    with pytest.raises(AlgebraMismatch):
        a.basis_element(0) * b.basis_element(0)


def test_idempotents():
    a = group_algebra(cyclic_group(2))
    half = a.element({0: Fraction(1, 2), 1: Fraction(1, 2)})
    assert half.is_idempotent()
    assert not a.basis_element(1).is_idempotent()


def test_quotient_by_augmentation_ideal():
    a = group_algebra(cyclic_group(3))
    ideal = SubspaceBasis.span([{0: 1, 1: -1}, {1: 1, 2: -1}], 3)
    q = quotient_algebra(a, ideal)
    assert q.dim == 1
    assert q.basis_product(0, 0) == {0: 1}


def test_quotient_by_non_ideal_raises():
    a = group_algebra(cyclic_group(2))
    with pytest.raises(NotAnIdeal):
        quotient_algebra(a, SubspaceBasis.span([{0: 1}], 2))


def test_format_vector():
    a = group_algebra(cyclic_group(2))
    assert a.format_vector({0: Fraction(1, 2), 1: -1}) == '1/2*e - a'
    assert a.format_vector({}) == '0'
