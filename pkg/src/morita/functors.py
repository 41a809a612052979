"""
Functors - Morita

Phi(X) = P (x)_A X (x)_A Q and Gamma(Y) = Q (x)_B Y (x)_B P, with the
B-actions rebased to Q[G] along Psi, and the evaluation maps proving
Gamma(Phi(X)) = X and Phi(Gamma(Y)) = Y on induced modules.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from bimodule import BalancedTensor, Bimodule, BimoduleMap, balanced_tensor, inducedness_check
from checks.report import CheckReport, COMPUTED
from linalg import SparseMatrix, SparseVector
from shared.errors import AlgebraMismatch, NotInduced
from .witness import MoritaWitness

logger = logging.getLogger(__name__)


def _transport(actions: Sequence[SparseMatrix], change: SparseMatrix, dim: int) -> list:
    """New action of basis element k: sum_j change[j, k] * actions[j]."""
    out = []
    for col in change.columns_view():
        m = SparseMatrix(dim, dim)
        for j, c in col.items():
            m = m + actions[j].scale(c)
        out.append(m)
    return out


def rebase(module: Bimodule, w: MoritaWitness, to_group: bool) -> Bimodule:
    """Move a B-bimodule to Q[G] along Psi (to_group) or a Q[G]-bimodule back to B."""
    source, target = (w.B, w.group_algebra) if to_group else (w.group_algebra, w.B)
    if module.left_algebra is not source or module.right_algebra is not source:
        raise AlgebraMismatch(f"{module.name} is not a bimodule over {source.name}")
    change = w.psi if to_group else w.psi_inverse
    left = _transport(module.left_action, change, module.dim)
    right = _transport(module.right_action, change, module.dim)
    return Bimodule(target, target, module.dim, left, right, module.basis_names, module.name)


@dataclass(frozen=True, eq=False)
class PhiTensors:
    """P (x)_A X and (P (x)_A X) (x)_A Q, the latter a B-bimodule."""

    px: BalancedTensor
    pxq: BalancedTensor


def phi_tensors(w: MoritaWitness, x: Bimodule) -> PhiTensors:
    if x.left_algebra is not w.algebra or x.right_algebra is not w.algebra:
        raise AlgebraMismatch(f"{x.name} is not a bimodule over {w.algebra.name}")
    px = balanced_tensor(w.P, x)
    pxq = balanced_tensor(px.module, w.Q, f"Phi({x.name})")
    return PhiTensors(px, pxq)


def phi(w: MoritaWitness, x: Bimodule) -> Bimodule:
    """
    Phi(X) = P (x)_A X (x)_A Q as a Q[G]-bimodule.

    Raises:
        AlgebraMismatch: If X is not an A(S)-bimodule
    """
    result = rebase(phi_tensors(w, x).pxq.module, w, to_group=True)
    logger.debug(f"Phi({x.name}) has dimension {result.dim}")
    return result


def _as_b_module(w: MoritaWitness, y: Bimodule) -> Bimodule:
    if y.left_algebra is w.B and y.right_algebra is w.B:
        return y
    return rebase(y, w, to_group=False)


@dataclass(frozen=True, eq=False)
class GammaTensors:
    qy: BalancedTensor
    qyp: BalancedTensor


def gamma_tensors(w: MoritaWitness, y: Bimodule) -> GammaTensors:
    yb = _as_b_module(w, y)
    qy = balanced_tensor(w.Q, yb)
    qyp = balanced_tensor(qy.module, w.P, f"Gamma({y.name})")
    return GammaTensors(qy, qyp)


def gamma(w: MoritaWitness, y: Bimodule) -> Bimodule:
    """
    Gamma(Y) = Q (x)_B Y (x)_B P as an A(S)-bimodule.

    Y may be given over Q[G] or over B.

    Raises:
        AlgebraMismatch: If Y is over neither
    """
    result = gamma_tensors(w, y).qyp.module
    logger.debug(f"Gamma({y.name}) has dimension {result.dim}")
    return result


def roundtrip_check(w: MoritaWitness, x: Bimodule) -> CheckReport:
    """
    Gamma(Phi(X)) -> X, q (x) (p (x) x (x) q') (x) p' -> (qp).x.(q'p'), is bijective.

    Raises:
        NotInduced: If X is not induced
    """
    witness = inducedness_check(x)
    if not witness:
        raise NotInduced(f"{x.name} is not induced (tensor dim {witness.tensor_dim}, "
                         f"module dim {witness.module_dim}, rank {witness.rank})")
    a = w.algebra
    pv, qv = w.corners.p_basis.vectors, w.corners.q_basis.vectors
    ph = phi_tensors(w, x)
    qy = balanced_tensor(w.Q, ph.pxq.module)
    qyp = balanced_tensor(qy.module, w.P)

    def evaluate(u: int, p2: int) -> SparseVector:
        q1, v = qy.lift(u)
        t, q2 = ph.pxq.lift(v)
        p1, xj = ph.px.lift(t)
        inner = x.act_left(a.mul_vectors(qv[q1], pv[p1]), {xj: 1})
        return x.act_right(inner, a.mul_vectors(qv[q2], pv[p2]))

    matrix = qyp.induced_map(evaluate, x.dim)
    ev = BimoduleMap(qyp.module, x, matrix)
    r = ev.rank
    passed = qyp.dim == x.dim == r
    logger.info(f"Roundtrip Gamma(Phi({x.name})) -> {x.name}: dims {qyp.dim} -> {x.dim}, rank {r}")
    return CheckReport('roundtrip', w.semigroup.name, passed, {
        'module': x.name, 'phi_dim': ph.pxq.dim, 'gamma_phi_dim': qyp.dim,
        'module_dim': x.dim, 'evaluation_rank': r,
    }, COMPUTED)


def reverse_roundtrip_check(w: MoritaWitness, y: Bimodule) -> CheckReport:
    """
    Phi(Gamma(Y)) -> Y, p (x) (q (x) y (x) p') (x) q' -> [pq].y.[p'q'], is bijective.

    Raises:
        NotInduced: If Y is not induced
    """
    yb = _as_b_module(w, y)
    witness = inducedness_check(yb)
    if not witness:
        raise NotInduced(f"{y.name} is not induced over {w.B.name}")
    a, bb = w.algebra, w.corners.b_basis
    pv, qv = w.corners.p_basis.vectors, w.corners.q_basis.vectors
    gt = gamma_tensors(w, yb)
    px = balanced_tensor(w.P, gt.qyp.module)
    pxq = balanced_tensor(px.module, w.Q)

    def bracket(p: int, q: int) -> SparseVector:
        return {k: c for k, c in enumerate(bb.coordinates(a.mul_vectors(pv[p], qv[q]))) if c}

    def evaluate(t: int, q2: int) -> SparseVector:
        p1, v = px.lift(t)
        u, p2 = gt.qyp.lift(v)
        q1, yj = gt.qy.lift(u)
        inner = yb.act_left(bracket(p1, q1), {yj: 1})
        return yb.act_right(inner, bracket(p2, q2))

    matrix = pxq.induced_map(evaluate, yb.dim)
    ev = BimoduleMap(pxq.module, yb, matrix)
    r = ev.rank
    passed = pxq.dim == yb.dim == r
    logger.info(f"Reverse roundtrip Phi(Gamma({y.name})) -> {y.name}: dims {pxq.dim} -> {yb.dim}, rank {r}")
    return CheckReport('reverse_roundtrip', w.semigroup.name, passed, {
        'module': y.name, 'gamma_dim': gt.qyp.dim, 'phi_gamma_dim': pxq.dim,
        'module_dim': yb.dim, 'evaluation_rank': r,
    }, COMPUTED)


def preserves_inducedness(w: MoritaWitness, x: Bimodule) -> bool:
    """inducedness of Phi(X) whenever X is induced."""
    if not inducedness_check(x):
        return True
    return bool(inducedness_check(phi(w, x)))


__all__ = [
    'rebase', 'phi', 'gamma', 'phi_tensors', 'gamma_tensors',
    'roundtrip_check', 'reverse_roundtrip_check', 'preserves_inducedness',
]
