"""
Splittings - Structure Checks

Explicit splittings of multiplication A (x) A -> A that are one-sided
module maps, the finite content of strict projectivity of A(S) and l1(S).

Tensors are sparse dicts keyed by i*dim + j for e_i (x) e_j.
"""

import logging
from fractions import Fraction
from typing import Dict, Mapping

from algebra import FiniteAlgebra
from bimodule import corner_modules
from hochschild import check_splitting
from linalg import SparseVector, vec_add
from rees import ReesSemigroup, e_position, f_position, witness_idempotent
from shared.errors import BadSplitting, ValidationError
from .report import CheckReport, CONSTRUCTIVE

logger = logging.getLogger(__name__)

Splitting = Dict[int, SparseVector]

REDUCED = 'reduced'
FULL = 'full'
NAIVE = 'naive'


# === Tensor helpers ===

def tensor_multiply(a: FiniteAlgebra, t: Mapping[int, Fraction]) -> SparseVector:
    """Pi(t), the product of the two factors."""
    d = a.dim
    out: SparseVector = {}
    for key, c in t.items():
        i, j = divmod(key, d)
        vec_add(out, a.basis_product(i, j), c)
    return out


def act_left_on_tensor(a: FiniteAlgebra, k: int, t: Mapping[int, Fraction]) -> SparseVector:
    """e_k . t on the left factor."""
    d = a.dim
    out: SparseVector = {}
    for key, c in t.items():
        i, j = divmod(key, d)
        for m, v in a.basis_product(k, i).items():
            vec_add(out, {m * d + j: v}, c)
    return out


def act_right_on_tensor(a: FiniteAlgebra, t: Mapping[int, Fraction], k: int) -> SparseVector:
    """t . e_k on the right factor."""
    d = a.dim
    out: SparseVector = {}
    for key, c in t.items():
        i, j = divmod(key, d)
        for m, v in a.basis_product(j, k).items():
            vec_add(out, {i * d + m: v}, c)
    return out


def apply_splitting(rho: Mapping[int, SparseVector], vec: Mapping[int, Fraction]) -> SparseVector:
    out: SparseVector = {}
    for k, c in vec.items():
        vec_add(out, rho.get(k, {}), c)
    return out


def _simple_tensor(d: int, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> SparseVector:
    return {i * d + j: cu * cv for i, cu in u.items() for j, cv in v.items() if cu * cv}


# === Splittings of A(S) and l1(S) ===

def right_splitting(s: ReesSemigroup, which: str = REDUCED) -> Splitting:
    """
    rho : A -> A (x) A, a right module map with Pi(rho(x)) = x.

    Args:
        s: Rees semigroup
        which: 'reduced' for A(S), 'full' for l1(S), or 'naive' for the
            extension rho(o) = e_1 (x) o on l1(S), which is not a module map
            as soon as some product xt = o with i(x) != 1

    Returns:
        Basis index -> image in A (x) A

    A(S): rho(x) = e_i (x) x on iS.
    l1(S): rho(x) = (e_i - o) (x) (x - o) + o (x) o and rho(o) = o (x) o.
    """
    full = which != REDUCED
    a = s.full_algebra if full else s.reduced_algebra
    d = a.dim
    zero = s.zero_index
    rho: Splitting = {}
    for x in s.elements():
        if x is None:
            continue
        k = s.index(x)
        e = s.index(e_position(s, x.i))
        if which == FULL:
            rho[k] = _simple_tensor(d, {e: 1, zero: -1}, {k: 1, zero: -1})
            vec_add(rho[k], {zero * d + zero: 1})
        else:
            rho[k] = {e * d + k: Fraction(1)}
    if which == FULL:
        rho[zero] = {zero * d + zero: Fraction(1)}
    elif which == NAIVE:
        rho[zero] = {s.index(e_position(s, 0)) * d + zero: Fraction(1)}
    elif which != REDUCED:
        raise ValidationError(f"unknown splitting variant {which!r}")
    return rho


def left_splitting(s: ReesSemigroup, which: str = REDUCED) -> Splitting:
    """
    Mirror of right_splitting through f_lambda: rho(x) = x (x) f_lambda on S_lambda,
    a left module map. On l1(S): (x - o) (x) (f_lambda - o) + o (x) o.
    """
    full = which == FULL
    if which not in (REDUCED, FULL):
        raise ValidationError(f"unknown splitting variant {which!r}")
    a = s.full_algebra if full else s.reduced_algebra
    d = a.dim
    zero = s.zero_index
    rho: Splitting = {}
    for x in s.elements():
        if x is None:
            continue
        k = s.index(x)
        f = s.index(f_position(s, x.lam))
        if full:
            rho[k] = _simple_tensor(d, {k: 1, zero: -1}, {f: 1, zero: -1})
            vec_add(rho[k], {zero * d + zero: 1})
        else:
            rho[k] = {k * d + f: Fraction(1)}
    if full:
        rho[zero] = {zero * d + zero: Fraction(1)}
    return rho


def splitting_report(a: FiniteAlgebra, rho: Mapping[int, SparseVector], side: str,
                     instance: str, check_name: str = 'splitting') -> CheckReport:
    """Run check_splitting and record the outcome instead of raising."""
    try:
        check_splitting(a, rho, side)
    except BadSplitting as exc:
        logger.warning(f"{check_name} on {a.name} ({side}) fails: {exc}")
        return CheckReport(check_name, instance, False,
                           {'algebra': a.name, 'side': side, 'violation': str(exc)}, CONSTRUCTIVE)
    return CheckReport(check_name, instance, True,
                       {'algebra': a.name, 'side': side, 'basis_checked': a.dim}, CONSTRUCTIVE)


def projectivity_check(s: ReesSemigroup) -> CheckReport:
    """
    Right and left splittings of A(S) and l1(S) are module maps splitting
    multiplication.
    """
    parts = {}
    for which, a in ((REDUCED, s.reduced_algebra), (FULL, s.full_algebra)):
        parts[f"{a.name}_right"] = splitting_report(a, right_splitting(s, which), 'right', s.name)
        parts[f"{a.name}_left"] = splitting_report(a, left_splitting(s, which), 'left', s.name)
    passed = all(parts.values())
    details = {key: rep.details for key, rep in parts.items()}
    logger.info(f"Projectivity splittings for {s.name}: {'passed' if passed else 'FAILED'}")
    return CheckReport('projectivity', s.name, passed, details, CONSTRUCTIVE)


# === Corner module P = eA ===

def corner_projectivity_check(s: ReesSemigroup, i: int, lam: int) -> CheckReport:
    """
    P = eA(S) at e = (i, p^-1, lambda) is projective on both sides:

    - sigma((i, g, mu)) = (i, g, lambda) (x) (i, p^-1, mu) splits B (x) P -> P
      as a left B-module map
    - x -> e (x) x splits P (x) A -> P as a right A-module map

    Raises:
        ZeroSandwichEntry: If p_{lambda i} is o
    """
    a = s.reduced_algebra
    d = a.dim
    e = witness_idempotent(s, i, lam)
    corners = corner_modules(a, e)
    p_inv = s.group.inv(s.entry(lam, i))
    b_vectors = corners.b_basis.vectors
    violations = []

    def sigma(k: int) -> SparseVector:
        x = s.element(k)
        left = s.index(x._replace(lam=lam))
        right = s.index(x._replace(g=p_inv))
        return {left * d + right: Fraction(1)}

    ek = _basis_index(e)
    block = [s.index(x) for x in s.elements() if x is not None and x.i == i]
    for k in block:
        if tensor_multiply(a, sigma(k)) != {k: 1}:
            violations.append(f"B-splitting: Pi(sigma({s.element_names[k]})) != {s.element_names[k]}")
        for bvec in b_vectors:
            moved: SparseVector = {}
            for bk, c in bvec.items():
                vec_add(moved, act_left_on_tensor(a, bk, sigma(k)), c)
            expected = apply_splitting({m: sigma(m) for m in block}, a.mul_vectors(bvec, {k: 1}))
            if moved != expected:
                violations.append(f"sigma not B-linear at {s.element_names[k]}")
        for t in range(d):
            # (e (x) x) . t = e (x) xt
            xt = a.basis_product(k, t)
            if act_right_on_tensor(a, {ek * d + k: 1}, t) != {ek * d + m: v for m, v in xt.items()}:
                violations.append(f"A-splitting not right linear at ({s.element_names[k]}, {s.element_names[t]})")
        if a.mul_vectors(e.coords, {k: 1}) != {k: 1}:
            violations.append(f"e does not fix {s.element_names[k]}")

    passed = not violations
    details = {'position': [i + 1, lam + 1], 'dim_P': corners.P.dim, 'dim_B': corners.B.dim}
    if violations:
        details['violation'] = violations[0]
    logger.info(f"Corner projectivity at (i={i + 1}, lambda={lam + 1}) of {s.name}: "
                f"{'passed' if passed else 'FAILED'}")
    return CheckReport('corner_projectivity', s.name, passed, details, CONSTRUCTIVE)


def _basis_index(e) -> int:
    """Basis index of an idempotent that is a single basis element."""
    (k,) = e.coords.keys()
    return k
