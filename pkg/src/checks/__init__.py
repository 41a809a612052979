"""
Checks Package

Contains:
- CheckReport: outcome value shared by every certificate
- right_splitting, left_splitting, projectivity_check: one-sided splittings
- corner_projectivity_check: projectivity of P = eA(S)
- biprojective_diagonal, biprojectivity_check, group_diagonal_check
- self_induced_check, weak_amenability_check, trivial_coefficients_check
"""

from .report import COMPUTED, CONSTRUCTIVE, CheckReport
from .splittings import (
    FULL, NAIVE, REDUCED, Splitting, act_left_on_tensor, act_right_on_tensor, apply_splitting,
    corner_projectivity_check, left_splitting, projectivity_check, right_splitting,
    splitting_report, tensor_multiply,
)
from .biprojectivity import biprojective_diagonal, biprojectivity_check, group_diagonal_check
from .amenability import (
    direct_first_cohomology, four_algebras, self_induced_check, trivial_coefficients_check,
    weak_amenability_check,
)

__all__ = [
    'COMPUTED', 'CONSTRUCTIVE', 'CheckReport',
    'FULL', 'NAIVE', 'REDUCED', 'Splitting', 'act_left_on_tensor', 'act_right_on_tensor', 'apply_splitting',
    'corner_projectivity_check', 'left_splitting', 'projectivity_check', 'right_splitting',
    'splitting_report', 'tensor_multiply',
    'biprojective_diagonal', 'biprojectivity_check', 'group_diagonal_check',
    'direct_first_cohomology', 'four_algebras', 'self_induced_check', 'trivial_coefficients_check',
    'weak_amenability_check',
]
