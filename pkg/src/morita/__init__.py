"""
Morita Package

Contains:
- MoritaWitness, build_witness: the context P, Q, B at an idempotent
- phi, gamma: the functors between A(S)- and Q[G]-bimodules
- roundtrip_check, reverse_roundtrip_check: the evaluation isomorphisms
- invariance_harness: the five-column Hochschild homology comparison
"""

from .witness import (
    MoritaWitness, build_witness, compatibility_check, corner_compatibility, multiplication_ranks,
)
from .functors import (
    gamma, gamma_tensors, phi, phi_tensors, preserves_inducedness, rebase,
    reverse_roundtrip_check, roundtrip_check,
)
from .harness import (
    COLUMNS, InvarianceTable, choice_independence, column_algebras, homology_job,
    invariance_harness, run_inline, valid_positions, witness_table,
)

__all__ = [
    'MoritaWitness', 'build_witness', 'compatibility_check', 'corner_compatibility', 'multiplication_ranks',
    'gamma', 'gamma_tensors', 'phi', 'phi_tensors', 'preserves_inducedness', 'rebase',
    'reverse_roundtrip_check', 'roundtrip_check',
    'COLUMNS', 'InvarianceTable', 'choice_independence', 'column_algebras', 'homology_job',
    'invariance_harness', 'run_inline', 'valid_positions', 'witness_table',
]
