"""
Rees Algebras - Rees Construction

The algebras l1(S) and A(S) of a Rees semigroup, the distinguished
idempotents e_i and f_lambda, and the block decomposition of A(S) into
copies of Q[G].
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from algebra import AlgebraElement, FiniteAlgebra
from shared.errors import ValidationError, ZeroSandwichEntry
from .semigroup import ReesElement, ReesSemigroup

logger = logging.getLogger(__name__)


def full_algebra(s: ReesSemigroup) -> FiniteAlgebra:
    """l1(S): dimension |I||G||Lambda| + 1, zero as the last basis element."""
    return s.full_algebra


def reduced_algebra(s: ReesSemigroup) -> FiniteAlgebra:
    """A(S): dimension |I||G||Lambda|; products hitting zero vanish."""
    return s.reduced_algebra


def _algebra(s: ReesSemigroup, full: bool) -> FiniteAlgebra:
    return s.full_algebra if full else s.reduced_algebra


def e_position(s: ReesSemigroup, i: int) -> ReesElement:
    """(i, p_{mu i}^-1, mu) with mu the smallest lambda where p_{mu i} is not o."""
    if not 0 <= i < s.i_size:
        raise ValidationError(f"index i={i + 1} outside 1..{s.i_size}")
    mu = next(lam for lam in range(s.lambda_size) if s.entry(lam, i) is not None)
    return ReesElement(i, s.group.inv(s.entry(mu, i)), mu)


def f_position(s: ReesSemigroup, lam: int) -> ReesElement:
    """(j, p_{lambda j}^-1, lambda) with j the smallest i where p_{lambda j} is not o."""
    if not 0 <= lam < s.lambda_size:
        raise ValidationError(f"index lambda={lam + 1} outside 1..{s.lambda_size}")
    j = next(i for i in range(s.i_size) if s.entry(lam, i) is not None)
    return ReesElement(j, s.group.inv(s.entry(lam, j)), lam)


def idempotent_e(s: ReesSemigroup, i: int, full: bool = False) -> AlgebraElement:
    """
    e_i, a left unit for the right ideal iS = {(i, g, lambda)}.

    Args:
        s: Rees semigroup
        i: Index in I (0-based)
        full: Return the element of l1(S) instead of A(S)
    """
    return _algebra(s, full).basis_element(s.index(e_position(s, i)))


def idempotent_f(s: ReesSemigroup, lam: int, full: bool = False) -> AlgebraElement:
    """f_lambda, a right unit for the left ideal S_lambda = {(i, g, lambda)}."""
    return _algebra(s, full).basis_element(s.index(f_position(s, lam)))


def witness_idempotent(s: ReesSemigroup, i: int, lam: int, full: bool = False) -> AlgebraElement:
    """
    e = (i, p_{lambda i}^-1, lambda).

    Raises:
        ZeroSandwichEntry: If p_{lambda i} is o
    """
    p = s.entry(lam, i)
    if p is None:
        raise ZeroSandwichEntry(i, lam)
    return _algebra(s, full).basis_element(s.index(ReesElement(i, s.group.inv(p), lam)))


def default_position(s: ReesSemigroup) -> Tuple[int, int]:
    """Smallest (i, lambda) with p_{lambda i} not o."""
    return min((i, lam) for i in range(s.i_size) for lam in range(s.lambda_size)
               if s.entry(lam, i) is not None)


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """
    Partition of the basis of A(S) into blocks iS_lambda of size |G|.

    Attributes:
        semigroup: The Rees semigroup
        blocks: (i, lambda) -> basis indices of A(S), ordered by g
    """

    semigroup: ReesSemigroup
    blocks: Dict[Tuple[int, int], Tuple[int, ...]]

    def block_of(self, k: int) -> Tuple[int, int]:
        x = self.semigroup.element(k)
        if x is None:
            raise ValidationError("the zero lies in no block")
        return x.i, x.lam

    def isomorphism(self, i: int, lam: int) -> Tuple[int, ...]:
        """
        Basis index of (i, g p_{lambda i}^-1, lambda) for each g in G.

        This is the algebra isomorphism Q[G] -> l1(iS_lambda).

        Raises:
            ZeroSandwichEntry: If p_{lambda i} is o
        """
        s = self.semigroup
        p = s.entry(lam, i)
        if p is None:
            raise ZeroSandwichEntry(i, lam)
        grp = s.group
        p_inv = grp.inv(p)
        return tuple(s.index(ReesElement(i, grp.mul(g, p_inv), lam)) for g in range(grp.order))


def block_decomposition(s: ReesSemigroup) -> BlockDecomposition:
    blocks = {}
    for i in range(s.i_size):
        for lam in range(s.lambda_size):
            blocks[(i, lam)] = tuple(s.index(ReesElement(i, g, lam)) for g in range(s.group.order))
    return BlockDecomposition(s, blocks)
