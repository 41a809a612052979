"""
Reduction - Bimodules

The reduced module X~ = X / (zX + Xz) of a bimodule over a semigroup
algebra l1(T) with zero z, viewed as a bimodule over A(T) = l1(T) / Qz.
"""

import logging
from typing import Optional

from algebra import FiniteAlgebra, quotient_algebra
from linalg import SparseMatrix, SubspaceBasis, quotient_projection
from shared.errors import AlgebraMismatch, IllDefinedAction, ValidationError
from .bimodule import Bimodule

logger = logging.getLogger(__name__)


def reduce_module(x: Bimodule, zero_index: int, reduced: Optional[FiniteAlgebra] = None) -> Bimodule:
    """
    Pass from an l1(T)-bimodule to the reduced A(T)-bimodule.

    Args:
        x: Bimodule over l1(T) on both sides
        zero_index: Basis index of the zero z in l1(T)
        reduced: A(T) with basis l1(T) minus z in order; built as the
            quotient by Qz when omitted

    Returns:
        X / (zX + Xz) with the induced A(T)-actions

    Raises:
        IllDefinedAction: If some action does not preserve zX + Xz
    """
    a = x.left_algebra
    if x.right_algebra is not a:
        raise AlgebraMismatch("reduction needs the same algebra on both sides")
    if not 0 <= zero_index < a.dim:
        raise ValidationError(f"zero index {zero_index} outside dimension {a.dim}")
    if reduced is None:
        reduced = quotient_algebra(a, SubspaceBasis.span([{zero_index: 1}], a.dim), f"{a.name}~")
    if reduced.dim != a.dim - 1:
        raise AlgebraMismatch(f"{reduced.name} is not the reduced algebra of {a.name}")

    generators = x.left_action[zero_index].column_vectors() + x.right_action[zero_index].column_vectors()
    sub = SubspaceBasis.span(generators, x.dim)
    for k in range(a.dim):
        for side, mats in (('left', x.left_action), ('right', x.right_action)):
            for v in sub.vectors:
                if not sub.contains(mats[k].apply(v)):
                    raise IllDefinedAction(f"{side} action of {a.basis_names[k]} does not preserve "
                                           f"{a.basis_names[zero_index]}X + X{a.basis_names[zero_index]}")

    proj, section = quotient_projection(sub, x.dim)
    keep = [k for k in range(a.dim) if k != zero_index]

    def induced(m: SparseMatrix) -> SparseMatrix:
        return proj @ m @ section

    left = [induced(x.left_action[k]) for k in keep]
    right = [induced(x.right_action[k]) for k in keep]
    names = tuple(x.basis_names[next(iter(col))] for col in section.columns_view())
    result = Bimodule(reduced, reduced, proj.rows, left, right, names, f"{x.name}~")
    logger.debug(f"Reduced {x.name}: dim {x.dim} -> {result.dim}")
    return result
