"""
Algebra Core Package

Contains:
- GroupTable: finite groups by Cayley table
- FiniteAlgebra, AlgebraElement: structure-constant algebras
- Constructions: group, semigroup and reduced semigroup algebras,
  unitization, direct sums, quotients
"""

from .groups import (
    GroupTable, group_from_table, cyclic_group, symmetric_group_3, klein_four_group,
    table_associativity_violation,
)
from .finite_algebra import (
    FiniteAlgebra, AlgebraElement, format_vector,
    group_algebra, semigroup_algebra, reduced_semigroup_algebra,
    unitize, direct_sum, zero_algebra, quotient_algebra,
)

__all__ = [
    'GroupTable', 'group_from_table', 'cyclic_group', 'symmetric_group_3', 'klein_four_group',
    'table_associativity_violation',
    'FiniteAlgebra', 'AlgebraElement', 'format_vector',
    'group_algebra', 'semigroup_algebra', 'reduced_semigroup_algebra',
    'unitize', 'direct_sum', 'zero_algebra', 'quotient_algebra',
]
