"""
Homotopy - Hochschild

Chain-level certificates checked exactly, one basis chain at a time:

- bar_homotopy_check: the bar complex A# (x) A^(x)n (x) X -> X is
  contracted by s(a0 (x) .. (x) x) = 1 (x) a0' (x) .. (x) x, where a0' is
  the A-part of a0 (and s(x) = 1 (x) x in degree -1).
- hunital_homotopy_check: for a splitting rho of multiplication that is a
  right module map, rho (x) 1 contracts the complex
  .. -> A^(x)3 -> A^(x)2 -> A, b'(a1..an) = sum (-1)^(k-1) a1..a_k a_{k+1}..an.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Mapping, Optional, Tuple

from algebra import FiniteAlgebra, unitize
from bimodule import Bimodule
from config import CHAIN_DIM_CAP
from linalg import SparseVector
from shared.errors import AlgebraMismatch, BadSplitting, SizeGuardError

logger = logging.getLogger(__name__)

Chain = Tuple[int, ...]
ChainVector = Dict[Chain, Fraction]


@dataclass
class HomotopyResult:
    """
    Outcome of a homotopy check; truthy when every identity held.

    Attributes:
        name: Which certificate
        passed: All checked chains satisfied the identity
        degrees: Degrees checked
        chains_checked: Number of basis chains checked
        violation: (degree, chain in display names) of the first failure
    """

    name: str
    passed: bool
    degrees: Tuple[int, ...]
    chains_checked: int
    violation: Optional[Tuple[int, Tuple[str, ...]]] = None
    details: Dict[str, object] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def _add(target: ChainVector, chain: Chain, v) -> None:
    nv = target.get(chain, 0) + v
    if nv:
        target[chain] = nv
    else:
        target.pop(chain, None)


# === Bar complex ===

def _bar_boundary(u: FiniteAlgebra, x: Bimodule, vec: ChainVector) -> ChainVector:
    """
    b' on chains (a0, a1, .., an, x) of A# (x) A^(x)n (x) X.

    Degree 0 chains (a0, x) map to a0.x in X (chains (x,)), the augmentation.
    """
    out: ChainVector = {}
    unit = u.dim - 1
    for chain, coef in vec.items():
        *letters, xi = chain
        n = len(letters) - 1
        if n == 0:
            a0 = letters[0]
            if a0 == unit:
                _add(out, (xi,), coef)
            else:
                for r, v in x.left_column(a0, xi).items():
                    _add(out, (r,), coef * v)
            continue
        for k in range(n):
            sign = -1 if k % 2 else 1
            for m, v in u.basis_product(letters[k], letters[k + 1]).items():
                _add(out, tuple(letters[:k]) + (m,) + tuple(letters[k + 2:]) + (xi,), sign * coef * v)
        sign = -1 if n % 2 else 1
        for r, v in x.left_column(letters[n], xi).items():
            _add(out, tuple(letters[:n]) + (r,), sign * coef * v)
    return out


def _bar_contraction(u: FiniteAlgebra, vec: ChainVector) -> ChainVector:
    """s(a0 (x) rest) = 1 (x) a0' (x) rest; s(x) = 1 (x) x."""
    unit = u.dim - 1
    out: ChainVector = {}
    for chain, coef in vec.items():
        if len(chain) == 1:
            _add(out, (unit,) + chain, coef)
        elif chain[0] != unit:
            _add(out, (unit,) + chain, coef)
    return out


def bar_homotopy_check(a: FiniteAlgebra, x: Bimodule, max_degree: int,
                       cap: int = CHAIN_DIM_CAP) -> HomotopyResult:
    """
    Verify b s + s b = id on the bar complex of A over A# in degrees -1..max_degree.

    X is used as a left A-module.

    Raises:
        AlgebraMismatch: If X is not a left A-module
        SizeGuardError: If a degree has more than cap basis chains
    """
    if x.left_algebra is not a:
        raise AlgebraMismatch(f"{x.name} is not a left module over {a.name}")
    u = unitize(a)
    unit = u.dim - 1
    for n in range(max_degree + 1):
        count = u.dim * a.dim ** n * x.dim
        if count > cap:
            raise SizeGuardError(f"bar complex degree {n}", count, cap)

    def names(chain: Chain) -> Tuple[str, ...]:
        if len(chain) == 1:
            return (x.basis_names[chain[0]],)
        return tuple(u.basis_names[c] for c in chain[:-1]) + (x.basis_names[chain[-1]],)

    checked = 0
    # degree -1: b s = id on X
    for xi in range(x.dim):
        chain = (xi,)
        total = _bar_boundary(u, x, _bar_contraction(u, {chain: 1}))
        checked += 1
        if total != {chain: 1}:
            return HomotopyResult('bar', False, tuple(range(-1, max_degree + 1)), checked, (-1, names(chain)))

    for n in range(max_degree + 1):
        for a0 in range(u.dim):
            for word in product(range(a.dim), repeat=n):
                for xi in range(x.dim):
                    chain = (a0,) + word + (xi,)
                    vec = {chain: Fraction(1)}
                    total = _bar_boundary(u, x, _bar_contraction(u, vec))
                    for c, v in _bar_contraction(u, _bar_boundary(u, x, vec)).items():
                        _add(total, c, v)
                    checked += 1
                    if total != {chain: 1}:
                        logger.warning(f"Bar homotopy fails for {a.name} at degree {n}: {names(chain)}")
                        return HomotopyResult('bar', False, tuple(range(-1, max_degree + 1)), checked,
                                              (n, names(chain)))
    logger.info(f"Bar homotopy verified for {a.name} on {x.name}, degrees -1..{max_degree} ({checked} chains)")
    return HomotopyResult('bar', True, tuple(range(-1, max_degree + 1)), checked)


# === H-unitality ===

Splitting = Mapping[int, SparseVector]


def check_splitting(a: FiniteAlgebra, rho: Splitting, side: str = 'right') -> None:
    """
    Verify that rho : A -> A (x) A (tensor index i*dim + j) splits
    multiplication and is a right (or left) module map.

    Raises:
        BadSplitting: Naming the first failing basis element or pair
    """
    d = a.dim
    names = a.basis_names
    for k in range(d):
        image = rho.get(k, {})
        if any(not 0 <= t < d * d for t in image):
            raise BadSplitting(f"rho({names[k]}) leaves A (x) A")
        product_ = {}
        for t, c in image.items():
            i, j = divmod(t, d)
            for m, v in a.basis_product(i, j).items():
                _add(product_, m, c * v)
        if product_ != {k: 1}:
            raise BadSplitting(f"multiplication of rho({names[k]}) is {a.format_vector(product_)}, "
                               f"not {names[k]}")
    for s in range(d):
        for t in range(d):
            st = a.basis_product(s, t)
            expected: Dict[int, object] = {}
            for m, v in st.items():
                for key, c in rho.get(m, {}).items():
                    _add(expected, key, c * v)
            moved: Dict[int, object] = {}
            if side == 'right':
                # rho(s) . t acts on the right tensor factor
                for key, c in rho.get(s, {}).items():
                    i, j = divmod(key, d)
                    for m, v in a.basis_product(j, t).items():
                        _add(moved, i * d + m, c * v)
            else:
                # s . rho(t) acts on the left tensor factor
                for key, c in rho.get(t, {}).items():
                    i, j = divmod(key, d)
                    for m, v in a.basis_product(s, i).items():
                        _add(moved, m * d + j, c * v)
            if moved != expected:
                what = f"rho({names[s]}{names[t]}) != rho({names[s]}).{names[t]}" if side == 'right' \
                    else f"rho({names[s]}{names[t]}) != {names[s]}.rho({names[t]})"
                raise BadSplitting(f"not a {side} module map: {what}")


def _bar_prime(a: FiniteAlgebra, vec: ChainVector) -> ChainVector:
    out: ChainVector = {}
    for chain, coef in vec.items():
        for k in range(len(chain) - 1):
            sign = -1 if k % 2 else 1
            for m, v in a.basis_product(chain[k], chain[k + 1]).items():
                _add(out, chain[:k] + (m,) + chain[k + 2:], sign * coef * v)
    return out


def _rho_tensor_one(a: FiniteAlgebra, rho: Splitting, vec: ChainVector) -> ChainVector:
    d = a.dim
    out: ChainVector = {}
    for chain, coef in vec.items():
        for key, c in rho.get(chain[0], {}).items():
            i, j = divmod(key, d)
            _add(out, (i, j) + chain[1:], coef * c)
    return out


def hunital_homotopy_check(a: FiniteAlgebra, rho: Splitting, max_degree: int,
                           cap: int = CHAIN_DIM_CAP) -> HomotopyResult:
    """
    Verify b'(rho (x) 1) + (rho (x) 1)b' = id on A^(x)n for 1 <= n <= max_degree.

    Args:
        a: The algebra
        rho: Basis index -> image in A (x) A (index i*dim + j)
        max_degree: Largest n checked

    Raises:
        BadSplitting: If rho does not split multiplication as a right module map
        SizeGuardError: If dim A^n exceeds cap
    """
    check_splitting(a, rho, 'right')
    for n in range(1, max_degree + 1):
        if a.dim ** n > cap:
            raise SizeGuardError(f"A^(x){n}", a.dim ** n, cap)

    checked = 0
    degrees = tuple(range(1, max_degree + 1))
    for n in degrees:
        for chain in product(range(a.dim), repeat=n):
            vec = {chain: Fraction(1)}
            total = _bar_prime(a, _rho_tensor_one(a, rho, vec))
            for c, v in _rho_tensor_one(a, rho, _bar_prime(a, vec)).items():
                _add(total, c, v)
            checked += 1
            if total != {chain: 1}:
                names = tuple(a.basis_names[c] for c in chain)
                logger.warning(f"H-unital homotopy fails for {a.name} at degree {n}: {names}")
                return HomotopyResult('hunital', False, degrees, checked, (n, names))
    logger.info(f"H-unital homotopy verified for {a.name}, degrees 1..{max_degree} ({checked} chains)")
    return HomotopyResult('hunital', True, degrees, checked)
