"""
Rees Construction Package

Contains:
- ReesSemigroup, rees_new, rees_mul: validated Rees semigroups
- full_algebra, reduced_algebra: l1(S) and A(S)
- idempotent_e, idempotent_f, block_decomposition
- groupoid_sandwich: sandwich matrices from a groupoid
"""

from .semigroup import ReesElement, ReesSemigroup, SandwichEntry, ZERO_NAME, rees_new, rees_mul
from .algebras import (
    BlockDecomposition, block_decomposition, default_position, e_position, f_position,
    full_algebra, idempotent_e, idempotent_f, reduced_algebra, witness_idempotent,
)
from .groupoid import groupoid_sandwich

__all__ = [
    'ReesElement', 'ReesSemigroup', 'SandwichEntry', 'ZERO_NAME', 'rees_new', 'rees_mul',
    'BlockDecomposition', 'block_decomposition', 'default_position', 'e_position', 'f_position',
    'full_algebra', 'idempotent_e', 'idempotent_f', 'reduced_algebra', 'witness_idempotent',
    'groupoid_sandwich',
]
