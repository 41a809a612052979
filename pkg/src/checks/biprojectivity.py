"""
Biprojectivity - Structure Checks

The averaged diagonal of A(S) at a non-zero sandwich entry p = p_{lambda i}:

    rho((j, g, mu)) = 1/|G| sum_h (j, g h p^-1, lambda) (x) (i, h^-1, mu)

is a bimodule map splitting multiplication, so A(S) is biprojective for
finite G. Its restriction to Q[G] is the usual 1/|G| sum_h h (x) h^-1.
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple

from algebra import FiniteAlgebra, group_algebra
from linalg import SparseVector, vec_add
from rees import ReesElement, ReesSemigroup, default_position
from shared.errors import ZeroSandwichEntry
from .report import CheckReport, CONSTRUCTIVE
from .splittings import (
    Splitting, act_left_on_tensor, act_right_on_tensor, apply_splitting, tensor_multiply,
)

logger = logging.getLogger(__name__)


def biprojective_diagonal(s: ReesSemigroup, i: int, lam: int, normalize: bool = True) -> Splitting:
    """
    The diagonal rho : A(S) -> A(S) (x) A(S) at (i, lambda), 0-based.

    Args:
        normalize: Apply the 1/|G| factor; False gives the negative control
            with Pi(rho(x)) = |G| x

    Raises:
        ZeroSandwichEntry: If p_{lambda i} is o
    """
    p = s.entry(lam, i)
    if p is None:
        raise ZeroSandwichEntry(i, lam)
    grp = s.group
    d = s.reduced_algebra.dim
    p_inv = grp.inv(p)
    coef = Fraction(1, grp.order) if normalize else Fraction(1)
    rho: Splitting = {}
    for x in s.elements():
        if x is None:
            continue
        image: SparseVector = {}
        for h in range(grp.order):
            left = s.index(ReesElement(x.i, grp.mul(grp.mul(x.g, h), p_inv), lam))
            right = s.index(ReesElement(i, grp.inv(h), x.lam))
            vec_add(image, {left * d + right: coef})
        rho[s.index(x)] = image
    return rho


def _diagonal_violation(a: FiniteAlgebra, rho: Splitting, denominator: int) -> Optional[Tuple[str, object]]:
    names = a.basis_names
    for k in range(a.dim):
        image = rho.get(k, {})
        bad = [c for c in image.values() if (c * denominator).denominator != 1]
        if bad:
            return 'coefficients', f"rho({names[k]}) has coefficient {bad[0]} outside (1/{denominator})Z"
        product = tensor_multiply(a, image)
        if product != {k: 1}:
            return 'splitting', f"Pi(rho({names[k]})) = {a.format_vector(product)}"
    for x in range(a.dim):
        for y in range(a.dim):
            xy = apply_splitting(rho, a.basis_product(x, y))
            if act_left_on_tensor(a, x, rho.get(y, {})) != xy:
                return 'left_linear', f"{names[x]}.rho({names[y]}) != rho({names[x]}{names[y]})"
            if act_right_on_tensor(a, rho.get(x, {}), y) != xy:
                return 'right_linear', f"rho({names[x]}).{names[y]} != rho({names[x]}{names[y]})"
    return None


def biprojectivity_check(s: ReesSemigroup, position: Optional[Tuple[int, int]] = None,
                         normalize: bool = True) -> CheckReport:
    """
    Pi o rho = id, x.rho(y) = rho(xy) = rho(x).y on all basis pairs, and
    coefficients in (1/|G|)Z.
    """
    i, lam = position if position is not None else default_position(s)
    a = s.reduced_algebra
    rho = biprojective_diagonal(s, i, lam, normalize)
    violation = _diagonal_violation(a, rho, s.group.order)
    details = {
        'position': [i + 1, lam + 1],
        'terms_per_image': s.group.order,
        'pairs_checked': a.dim * a.dim,
        'scope': 'finite G only; the infinite-G converse is not tested',
    }
    if violation:
        details['failed'], details['violation'] = violation
        if violation[0] == 'splitting':
            factor = _splitting_factor(a, rho)
            details['factor'] = str(factor) if factor is not None else None
        logger.warning(f"Biprojective diagonal of {s.name} fails: {violation[1]}")
    else:
        logger.info(f"Biprojective diagonal of {s.name} at (i={i + 1}, lambda={lam + 1}) verified")
    return CheckReport('biprojectivity', s.name, violation is None, details, CONSTRUCTIVE)


def _splitting_factor(a: FiniteAlgebra, rho: Splitting) -> Optional[Fraction]:
    """c when Pi o rho = c * id for one scalar c, else None."""
    factors = set()
    for k in range(a.dim):
        product = tensor_multiply(a, rho.get(k, {}))
        if set(product) != {k}:
            return None
        factors.add(product[k])
    return factors.pop() if len(factors) == 1 else None


def group_diagonal_check(s: ReesSemigroup) -> CheckReport:
    """Delta = 1/|G| sum_h h (x) h^-1 has Pi(Delta) = 1 and g.Delta = Delta.g in Q[G]."""
    grp = s.group
    a = group_algebra(grp)
    d = a.dim
    delta: SparseVector = {}
    for h in range(grp.order):
        vec_add(delta, {h * d + grp.inv(h): Fraction(1, grp.order)})
    details = {'group_order': grp.order}
    passed = tensor_multiply(a, delta) == {grp.identity: 1}
    if not passed:
        details['violation'] = 'Pi(Delta) != 1'
    for g in range(d):
        if passed and act_left_on_tensor(a, g, delta) != act_right_on_tensor(a, delta, g):
            passed = False
            details['violation'] = f"{a.basis_names[g]}.Delta != Delta.{a.basis_names[g]}"
    return CheckReport('group_diagonal', s.name, passed, details, CONSTRUCTIVE)
