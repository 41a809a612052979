"""
Exact Linear Algebra Package

Contains:
- SparseMatrix: immutable sparse rational matrices
- rank, modular_rank, certified_rank: exact ranks
- SubspaceBasis, kernel_basis, image_basis, quotient_projection, inverse
"""

from .sparse_matrix import (
    Rational, SparseVector, SparseMatrix,
    vec_add, vec_scale, vec_clean, block_diagonal, kron,
)
from .elimination import rank, modular_rank, certified_rank, connected_blocks, choose_prime
from .subspace import (
    SubspaceBasis, echelonize, kernel_basis, image_basis,
    quotient_dim, quotient_projection, inverse,
)

__all__ = [
    'Rational', 'SparseVector', 'SparseMatrix',
    'vec_add', 'vec_scale', 'vec_clean', 'block_diagonal', 'kron',
    'rank', 'modular_rank', 'certified_rank', 'connected_blocks', 'choose_prime',
    'SubspaceBasis', 'echelonize', 'kernel_basis', 'image_basis',
    'quotient_dim', 'quotient_projection', 'inverse',
]
