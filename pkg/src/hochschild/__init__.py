"""
Hochschild Package

Contains:
- ChainComplex, hochschild_complex: the Hochschild chain complex
- HomologyReport, homology_dims, cohomology_dims: dimensions by exact rank
- CochainComplex, hochschild_cochain_complex: Hom(A^(x)n, Y) built directly
- bar_homotopy_check, hunital_homotopy_check: contracting homotopies
- dense_homology_dims: independent dense oracle
"""

from .complex import ChainComplex, chain_dims, check_chain_size, hochschild_boundary, hochschild_complex
from .homology import HomologyReport, boundary_ranks, cohomology_dims, homology_dims
from .cochains import CochainComplex, hochschild_coboundary, hochschild_cochain_complex
from .homotopy import HomotopyResult, bar_homotopy_check, check_splitting, hunital_homotopy_check
from .oracle import dense_boundary, dense_homology_dims, dense_rank

__all__ = [
    'ChainComplex', 'chain_dims', 'check_chain_size', 'hochschild_boundary', 'hochschild_complex',
    'HomologyReport', 'boundary_ranks', 'cohomology_dims', 'homology_dims',
    'CochainComplex', 'hochschild_coboundary', 'hochschild_cochain_complex',
    'HomotopyResult', 'bar_homotopy_check', 'check_splitting', 'hunital_homotopy_check',
    'dense_boundary', 'dense_homology_dims', 'dense_rank',
]
