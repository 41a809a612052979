"""
Witness - Morita

The Morita context of A(S) at an idempotent e = (i, p_{lambda i}^-1, lambda):
P = eA(S), Q = A(S)e, B = eA(S)e, the multiplication maps
P (x)_A Q -> B and Q (x)_B P -> A, and the algebra isomorphism
Psi : Q[G] -> B, g -> (i, g p_{lambda i}^-1, lambda).
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from algebra import AlgebraElement, FiniteAlgebra, group_algebra
from bimodule import (
    BalancedTensor, Bimodule, BimoduleMap, CornerModules,
    balanced_tensor, corner_modules, regular_bimodule,
)
from checks.report import CheckReport, COMPUTED
from linalg import SparseMatrix, inverse, rank
from rees import ReesSemigroup, block_decomposition, witness_idempotent
from shared.errors import DiscrepancyError, SingularMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MoritaWitness:
    """
    Attributes:
        semigroup: S
        position: (i, lambda), 0-based
        algebra: A(S)
        idempotent: e
        corners: P, Q, B with their embeddings into A(S)
        pq: P (x)_A Q
        qp: Q (x)_B P
        pq_iso: Multiplication P (x)_A Q -> B
        qp_iso: Multiplication Q (x)_B P -> A(S)
        group_algebra: Q[G]
        psi: dim B x |G| matrix of Psi in the basis of B
        psi_inverse: Its inverse
    """

    semigroup: ReesSemigroup
    position: Tuple[int, int]
    algebra: FiniteAlgebra
    idempotent: AlgebraElement
    corners: CornerModules
    pq: BalancedTensor
    qp: BalancedTensor
    pq_iso: BimoduleMap
    qp_iso: BimoduleMap
    group_algebra: FiniteAlgebra
    psi: SparseMatrix
    psi_inverse: SparseMatrix

    @property
    def P(self) -> Bimodule:
        return self.corners.P

    @property
    def Q(self) -> Bimodule:
        return self.corners.Q

    @property
    def B(self) -> FiniteAlgebra:
        return self.corners.B

    def dims(self) -> dict:
        return {
            'A': self.algebra.dim, 'P': self.P.dim, 'Q': self.Q.dim, 'B': self.B.dim,
            'P_tensor_Q': self.pq.dim, 'Q_tensor_P': self.qp.dim,
        }


def _psi(s: ReesSemigroup, i: int, lam: int, corners: CornerModules, g_alg: FiniteAlgebra) -> SparseMatrix:
    """Psi in the basis of B; checked to be a bijective algebra homomorphism."""
    b_basis = corners.b_basis
    positions = block_decomposition(s).isomorphism(i, lam)
    columns = []
    for idx in positions:
        coords = b_basis.coordinates({idx: 1})
        columns.append({k: c for k, c in enumerate(coords) if c})
    psi = SparseMatrix.from_columns(b_basis.dim, columns)

    b = corners.B
    for g in range(g_alg.dim):
        for h in range(g_alg.dim):
            left = b.mul_vectors(psi.columns_view()[g], psi.columns_view()[h])
            right = psi.apply(g_alg.basis_product(g, h))
            if left != right:
                raise DiscrepancyError(f"Psi is not multiplicative on ({g_alg.basis_names[g]}, "
                                       f"{g_alg.basis_names[h]})")
    return psi


def build_witness(s: ReesSemigroup, i: int, lam: int) -> MoritaWitness:
    """
    Build and verify the Morita context at (i, lambda).

    Args:
        s: Rees semigroup
        i: Index in I (0-based)
        lam: Index in Lambda (0-based)

    Raises:
        ZeroSandwichEntry: If p_{lambda i} is o
        DiscrepancyError: If a multiplication map is not bijective or Psi is
            not an algebra isomorphism
    """
    e = witness_idempotent(s, i, lam)
    a = s.reduced_algebra
    corners = corner_modules(a, e)
    p, q, b = corners
    pv, qv, bb = corners.p_basis.vectors, corners.q_basis.vectors, corners.b_basis

    pq = balanced_tensor(p, q)
    qp = balanced_tensor(q, p)

    def pq_product(r: int, c: int):
        coords = bb.coordinates(a.mul_vectors(pv[r], qv[c]))
        return {k: v for k, v in enumerate(coords) if v}

    def qp_product(r: int, c: int):
        return a.mul_vectors(qv[r], pv[c])

    pq_iso = BimoduleMap(pq.module, regular_bimodule(b), pq.induced_map(pq_product, b.dim))
    qp_iso = BimoduleMap(qp.module, regular_bimodule(a), qp.induced_map(qp_product, a.dim))
    for label, iso in (('P (x)_A Q -> B', pq_iso), ('Q (x)_B P -> A', qp_iso)):
        if not iso.is_isomorphism():
            raise DiscrepancyError(f"multiplication {label} at (i={i + 1}, lambda={lam + 1}) is not bijective: "
                                   f"dims {iso.source.dim} -> {iso.target.dim}, rank {iso.rank}")

    g_alg = group_algebra(s.group)
    psi = _psi(s, i, lam, corners, g_alg)
    try:
        psi_inv = inverse(psi)
    except SingularMatrix as exc:
        raise DiscrepancyError(f"Psi : Q[G] -> B is not bijective: {exc}") from exc

    logger.info(f"Morita witness for {s.name} at (i={i + 1}, lambda={lam + 1}): dim P={p.dim}, "
                f"dim Q={q.dim}, dim B={b.dim}, both multiplications bijective")
    return MoritaWitness(s, (i, lam), a, e, corners, pq, qp, pq_iso, qp_iso, g_alg, psi, psi_inv)


# === Compatibility ===

def _compatibility(corners: CornerModules, a: FiniteAlgebra, instance: str) -> CheckReport:
    """[p,q].p' = p.(q,p') and q.[p,q'] = (q,p).q' through the module actions."""
    p_mod, q_mod, b = corners
    pv, qv, bb = corners.p_basis.vectors, corners.q_basis.vectors, corners.b_basis
    checked = 0
    for r in range(p_mod.dim):
        for c in range(q_mod.dim):
            bracket = {k: v for k, v in enumerate(bb.coordinates(a.mul_vectors(pv[r], qv[c]))) if v}
            for r2 in range(p_mod.dim):
                # [p,q].p' vs p.(q,p')
                paren = a.mul_vectors(qv[c], pv[r2])
                left = p_mod.act_left(bracket, {r2: 1})
                right = p_mod.act_right({r: 1}, paren)
                checked += 1
                if left != right:
                    return CheckReport('morita_compatibility', instance, False, {
                        'identity': '[p,q].p\' = p.(q,p\')',
                        'violation': (p_mod.basis_names[r], q_mod.basis_names[c], p_mod.basis_names[r2]),
                    }, COMPUTED)
    for c in range(q_mod.dim):
        for r in range(p_mod.dim):
            paren = a.mul_vectors(qv[c], pv[r])
            for c2 in range(q_mod.dim):
                # q.[p,q'] vs (q,p).q'
                bracket = {k: v for k, v in enumerate(bb.coordinates(a.mul_vectors(pv[r], qv[c2]))) if v}
                left = q_mod.act_right({c: 1}, bracket)
                right = q_mod.act_left(paren, {c2: 1})
                checked += 1
                if left != right:
                    return CheckReport('morita_compatibility', instance, False, {
                        'identity': 'q.[p,q\'] = (q,p).q\'',
                        'violation': (q_mod.basis_names[c], p_mod.basis_names[r], q_mod.basis_names[c2]),
                    }, COMPUTED)
    return CheckReport('morita_compatibility', instance, True, {'triples_checked': checked}, COMPUTED)


def compatibility_check(w: MoritaWitness) -> CheckReport:
    """Morita-context compatibility for a built witness."""
    report = _compatibility(w.corners, w.algebra, w.semigroup.name)
    if not report:
        raise DiscrepancyError(f"Morita compatibility fails: {report.details}")
    return report


def corner_compatibility(a: FiniteAlgebra, e: AlgebraElement) -> CheckReport:
    """
    Compatibility of the corner context for any idempotent e.

    Reported, never raised: a failure is recorded in the returned report.
    """
    report = _compatibility(corner_modules(a, e), a, a.name)
    if not report:
        logger.warning(f"Corner compatibility fails for {e}: {report.details}")
    return report


def multiplication_ranks(w: MoritaWitness) -> dict:
    return {'P_tensor_Q_to_B': rank(w.pq_iso.matrix), 'Q_tensor_P_to_A': rank(w.qp_iso.matrix)}
