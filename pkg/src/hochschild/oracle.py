"""
Oracle - Hochschild

Independent dense brute force for small cases: boundary matrices are
written as sums of Kronecker products of dense action and multiplication
matrices (numpy object arrays of Fractions), and ranks are taken by sympy's
DomainMatrix over QQ. Shares no assembly or elimination code with the
sparse pipeline.
"""

import logging
from fractions import Fraction
from typing import List

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from algebra import FiniteAlgebra
from bimodule import Bimodule
from config import ORACLE_MAX_DEGREE, ORACLE_MAX_DIM
from shared.errors import SizeGuardError

logger = logging.getLogger(__name__)


def _eye(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for k in range(n):
        out[k, k] = Fraction(1)
    return out


def _dense_multiplication(a: FiniteAlgebra) -> np.ndarray:
    d = a.dim
    m = np.zeros((d, d * d), dtype=object)
    m[:, :] = Fraction(0)
    for i in range(d):
        for j in range(d):
            for k, v in a.basis_product(i, j).items():
                m[k, i * d + j] = Fraction(v)
    return m


def _dense_action(x: Bimodule, side: str) -> np.ndarray:
    """
    right: dX x (dX*dA), column x*dA + a holds x.a
    left:  dX x (dA*dX), column a*dX + x holds a.x
    """
    d, dx = x.left_algebra.dim, x.dim
    m = np.zeros((dx, dx * d), dtype=object)
    m[:, :] = Fraction(0)
    for a in range(d):
        mat = (x.right_action if side == 'right' else x.left_action)[a].to_dense()
        for xi in range(dx):
            col = xi * d + a if side == 'right' else a * dx + xi
            for r in range(dx):
                m[r, col] = mat[r][xi]
    return m


def dense_boundary(a: FiniteAlgebra, x: Bimodule, n: int) -> np.ndarray:
    """d_n as a dense matrix built from Kronecker products."""
    d, dx = a.dim, x.dim
    rest = d ** (n - 1)
    total = np.kron(_dense_action(x, 'right'), _eye(rest))
    mult = _dense_multiplication(a)
    for k in range(1, n):
        face = np.kron(np.kron(_eye(dx * d ** (k - 1)), mult), _eye(d ** (n - k - 1)))
        total = total + (face if k % 2 == 0 else -face)

    # move the last tensor factor to the front, then act on the left
    cols = dx * d ** n
    perm = np.empty(cols, dtype=np.int64)
    for c in range(cols):
        xi, word = divmod(c, d ** n)
        head, last = divmod(word, d)
        perm[c] = (last * dx + xi) * rest + head
    last_face = np.kron(_dense_action(x, 'left'), _eye(rest))[:, perm]
    total = total + (last_face if n % 2 == 0 else -last_face)
    return total


def dense_rank(m: np.ndarray) -> int:
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return 0
    data = {}
    for r, c in zip(*np.nonzero(m != 0)):
        v = Fraction(m[r, c])
        data.setdefault(int(r), {})[int(c)] = QQ(v.numerator, v.denominator)
    if not data:
        return 0
    return DomainMatrix(data, (rows, cols), QQ).rank()


def dense_homology_dims(a: FiniteAlgebra, x: Bimodule, max_degree: int = ORACLE_MAX_DEGREE,
                        force: bool = False) -> List[int]:
    """
    dim H_n(A, X) for n = 0..max_degree, all certified (d_{max_degree+1} is built).

    Raises:
        SizeGuardError: If dim A exceeds the oracle limit and force is not set
    """
    if a.dim > ORACLE_MAX_DIM and not force:
        raise SizeGuardError(f"oracle algebra {a.name}", a.dim, ORACLE_MAX_DIM)
    spaces = [x.dim * a.dim ** n for n in range(max_degree + 2)]
    ranks = [0] + [dense_rank(dense_boundary(a, x, n)) for n in range(1, max_degree + 2)]
    dims = [spaces[n] - ranks[n] - ranks[n + 1] for n in range(max_degree + 1)]
    logger.info(f"Dense oracle HH({a.name}, {x.name}) = {dims}")
    return dims
