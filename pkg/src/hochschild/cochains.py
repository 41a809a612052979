"""
Cochains - Hochschild

The Hochschild cochain complex C^n = Hom(A^(x)n, Y) built directly, with

    (df)(a1, .., a_{n+1}) = a1.f(a2, .., a_{n+1})
                          + sum_k (-1)^k f(.., a_k a_{k+1}, ..)
                          + (-1)^(n+1) f(a1, .., an).a_{n+1}

Used with Y = X* to compute H^n(A, X*) without transposing the chain complex.
A cochain is indexed word * dim Y + y for words in lexicographic order.
"""

import logging
from dataclasses import InitVar, dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Tuple

from algebra import FiniteAlgebra
from bimodule import Bimodule
from config import CHAIN_DIM_CAP
from linalg import SparseMatrix, certified_rank
from shared.errors import AlgebraMismatch, DiscrepancyError
from .complex import chain_dims, check_chain_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """0 -> C^0 -> C^1 -> .. -> C^N with coboundaries delta^0 .. delta^{N-1}."""

    spaces: Tuple[int, ...]
    coboundaries: Tuple[SparseMatrix, ...]
    algebra_name: str = 'A'
    coefficient_name: str = 'Y'
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool):
        if verify:
            for n in range(len(self.coboundaries) - 1):
                if not (self.coboundaries[n + 1] @ self.coboundaries[n]).is_zero():
                    raise DiscrepancyError(f"delta^{n + 1} delta^{n} != 0 for {self.algebra_name}")

    @property
    def max_degree(self) -> int:
        return len(self.spaces) - 1

    def cohomology_dims(self) -> List[int]:
        """dim H^n for n = 0..N; the top value is an upper bound."""
        ranks = []
        previous = 0
        for n, delta in enumerate(self.coboundaries):
            r = certified_rank(delta, upper_bound=self.spaces[n] - previous)
            ranks.append(r)
            previous = r
        padded = [0] + ranks + [0]
        # H^n = dim C^n - rank delta^n - rank delta^{n-1}
        return [self.spaces[n] - padded[n + 1] - padded[n] for n in range(len(self.spaces))]


def _preimages(a: FiniteAlgebra) -> Dict[int, List[Tuple[int, int, Fraction]]]:
    """m -> [(b, c, coefficient of e_m in e_b e_c)]."""
    out: Dict[int, List[Tuple[int, int, Fraction]]] = {}
    for (b, c), vec in a.products.items():
        for m, v in vec.items():
            out.setdefault(m, []).append((b, c, v))
    return out


def hochschild_coboundary(a: FiniteAlgebra, y: Bimodule, n: int) -> SparseMatrix:
    """delta^n : Hom(A^(x)n, Y) -> Hom(A^(x)(n+1), Y)."""
    d, dy = a.dim, y.dim
    pre = _preimages(a)
    entries: Dict[Tuple[int, int], object] = {}

    def add(row: int, col: int, v) -> None:
        key = (row, col)
        nv = entries.get(key, 0) + v
        if nv:
            entries[key] = nv
        else:
            entries.pop(key, None)

    def word_index(word) -> int:
        idx = 0
        for letter in word:
            idx = idx * d + letter
        return idx

    last_sign = -1 if (n + 1) % 2 else 1
    for w_idx, word in enumerate(product(range(d), repeat=n)):
        for r in range(dy):
            col = w_idx * dy + r
            # a1 . f(word)
            for a1 in range(d):
                u = word_index((a1,) + word)
                for s, v in y.left_column(a1, r).items():
                    add(u * dy + s, col, v)
            # f(.., b c, ..) with b c hitting word[k-1]
            for k in range(1, n + 1):
                sign = -1 if k % 2 else 1
                for b, c, v in pre.get(word[k - 1], ()):
                    u = word_index(word[:k - 1] + (b, c) + word[k:])
                    add(u * dy + r, col, sign * v)
            # f(word) . a_{n+1}
            for an1 in range(d):
                u = word_index(word + (an1,))
                for s, v in y.right_column(an1, r).items():
                    add(u * dy + s, col, last_sign * v)
    return SparseMatrix(dy * d ** (n + 1), dy * d ** n, entries)


def hochschild_cochain_complex(a: FiniteAlgebra, y: Bimodule, max_degree: int,
                               cap: int = CHAIN_DIM_CAP) -> CochainComplex:
    """
    Hom(A^(x)n, Y) for n = 0..max_degree with the Hochschild coboundary.

    Raises:
        AlgebraMismatch: If Y is not a bimodule over A
        SizeGuardError: If some cochain space exceeds cap
    """
    if y.left_algebra is not a or y.right_algebra is not a:
        raise AlgebraMismatch(f"{y.name} is not a bimodule over {a.name}")
    dims = chain_dims(y.dim, a.dim, max_degree)
    check_chain_size(dims, cap, 'cochain space')
    deltas = [hochschild_coboundary(a, y, n) for n in range(max_degree)]
    logger.info(f"Assembled cochain complex of {a.name} with values in {y.name}, dims {dims}")
    return CochainComplex(tuple(dims), tuple(deltas), a.name, y.name)
