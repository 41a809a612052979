"""
Hochschild Complex - Hochschild

Chain complexes of sparse matrices and the Hochschild complex
C_n = X (x) A^(x)n with boundary

    d(x (x) a1 (x) .. (x) an) = x.a1 (x) a2 (x) .. (x) an
                              + sum_k (-1)^k x (x) .. (x) a_k a_{k+1} (x) ..
                              + (-1)^n an.x (x) a1 (x) .. (x) a_{n-1}

Basis of C_n is lexicographic: X index major, then the A factors left to
right, i.e. index = x * dA^n + a1 * dA^(n-1) + .. + an.
"""

import logging
import time
from dataclasses import InitVar, dataclass, field
from itertools import product
from typing import Dict, List, Tuple

from algebra import FiniteAlgebra
from bimodule import Bimodule
from config import CHAIN_DIM_CAP
from linalg import SparseMatrix
from shared.errors import AlgebraMismatch, DiscrepancyError, SizeGuardError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """
    0 <- C_0 <- C_1 <- .. <- C_N.

    Attributes:
        spaces: dim C_0 .. dim C_N
        boundaries: d_1 .. d_N, d_n of shape dim C_{n-1} x dim C_n
        algebra_name: Name of A (reports)
        coefficient_name: Name of X (reports)
        timings: Assembly seconds per degree
    """

    spaces: Tuple[int, ...]
    boundaries: Tuple[SparseMatrix, ...]
    algebra_name: str = 'A'
    coefficient_name: str = 'X'
    timings: Dict[str, float] = field(default_factory=dict)
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool):
        object.__setattr__(self, 'spaces', tuple(self.spaces))
        object.__setattr__(self, 'boundaries', tuple(self.boundaries))
        if len(self.boundaries) != len(self.spaces) - 1:
            raise ValidationError(f"{len(self.boundaries)} boundaries for {len(self.spaces)} spaces")
        for n, d in enumerate(self.boundaries, start=1):
            if d.shape != (self.spaces[n - 1], self.spaces[n]):
                raise ValidationError(f"d_{n} has shape {d.shape}, expected "
                                      f"{self.spaces[n - 1]}x{self.spaces[n]}")
        if verify:
            self.check_square_zero()

    @property
    def max_degree(self) -> int:
        return len(self.spaces) - 1

    def boundary(self, n: int) -> SparseMatrix:
        """d_n; d_0 is the zero map C_0 -> 0."""
        if n == 0:
            return SparseMatrix(0, self.spaces[0])
        return self.boundaries[n - 1]

    def check_square_zero(self) -> None:
        """
        Raises:
            DiscrepancyError: If some d_n d_{n+1} is not exactly zero
        """
        for n in range(1, self.max_degree):
            composite = self.boundaries[n - 1] @ self.boundaries[n]
            if not composite.is_zero():
                (r, c), v = next(iter(composite.items()))
                raise DiscrepancyError(f"d_{n} d_{n + 1} != 0 for {self.algebra_name} with coefficients "
                                       f"in {self.coefficient_name} (entry ({r}, {c}) = {v})")

    def __repr__(self) -> str:
        return f"ChainComplex({self.algebra_name}, {self.coefficient_name}, dims={list(self.spaces)})"


def chain_dims(dim_x: int, dim_a: int, max_degree: int) -> List[int]:
    return [dim_x * dim_a ** n for n in range(max_degree + 1)]


def check_chain_size(dims: List[int], cap: int, what: str = 'chain space') -> None:
    """
    Raises:
        SizeGuardError: Naming the first degree whose dimension exceeds cap
    """
    for n, dim in enumerate(dims):
        if dim > cap:
            raise SizeGuardError(f"{what} C_{n}", dim, cap)


def hochschild_boundary(a: FiniteAlgebra, x: Bimodule, n: int) -> SparseMatrix:
    """d_n : X (x) A^(x)n -> X (x) A^(x)(n-1), assembled column by column."""
    d = a.dim
    dx = x.dim
    tail = d ** (n - 1)
    powers = [d ** k for k in range(n + 1)]
    entries: Dict[Tuple[int, int], object] = {}

    def add(row: int, col: int, v) -> None:
        key = (row, col)
        nv = entries.get(key, 0) + v
        if nv:
            entries[key] = nv
        else:
            entries.pop(key, None)

    col = 0
    for xi in range(dx):
        for word in product(range(d), repeat=n):
            # prefix[k] = value of word[:k]; suffix[k] = value of word[k:]
            prefix = [0] * (n + 1)
            for k in range(n):
                prefix[k + 1] = prefix[k] * d + word[k]
            suffix = [0] * (n + 1)
            for k in range(n - 1, -1, -1):
                suffix[k] = word[k] * powers[n - 1 - k] + suffix[k + 1]

            for r, v in x.right_column(word[0], xi).items():
                add(r * tail + suffix[1], col, v)

            base = xi * tail
            for k in range(1, n):
                sign = -1 if k % 2 else 1
                for m, v in a.basis_product(word[k - 1], word[k]).items():
                    add(base + prefix[k - 1] * powers[n - k] + m * powers[n - k - 1] + suffix[k + 1],
                        col, sign * v)

            last_sign = -1 if n % 2 else 1
            for r, v in x.left_column(word[n - 1], xi).items():
                add(r * tail + prefix[n - 1], col, last_sign * v)
            col += 1
    return SparseMatrix(dx * tail, dx * d ** n, entries)


def hochschild_complex(a: FiniteAlgebra, x: Bimodule, max_degree: int,
                       cap: int = CHAIN_DIM_CAP, verify: bool = True) -> ChainComplex:
    """
    Assemble the Hochschild complex of A with coefficients in X up to max_degree.

    Args:
        a: The algebra
        x: An A-A bimodule
        max_degree: Top degree N >= 0
        cap: Largest admissible dim C_n
        verify: Check d_n d_{n+1} = 0 exactly

    Raises:
        AlgebraMismatch: If X is not a bimodule over A on both sides
        SizeGuardError: If some dim C_n exceeds cap
    """
    if x.left_algebra is not a or x.right_algebra is not a:
        raise AlgebraMismatch(f"{x.name} is not a bimodule over {a.name}")
    if max_degree < 0:
        raise ValidationError(f"max degree must be >= 0, got {max_degree}")
    dims = chain_dims(x.dim, a.dim, max_degree)
    check_chain_size(dims, cap)

    boundaries = []
    timings = {}
    for n in range(1, max_degree + 1):
        start = time.perf_counter()
        boundaries.append(hochschild_boundary(a, x, n))
        timings[f"assemble_d{n}"] = time.perf_counter() - start
        logger.debug(f"d_{n} for {a.name}: {boundaries[-1]!r} in {timings[f'assemble_d{n}']:.3f}s")
    complex_ = ChainComplex(dims, boundaries, a.name, x.name, timings, verify=verify)
    logger.info(f"Assembled Hochschild complex of {a.name} with coefficients in {x.name}, dims {dims}")
    return complex_
