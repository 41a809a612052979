"""
Balanced Tensor - Bimodules

X (x)_B Y = (X (x) Y) / span{x.b (x) y - x (x) b.y} over basis triples, with
the induced outer actions, and the inducedness test A (x)_A X (x)_B B -> X.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Mapping, Tuple

from linalg import SparseMatrix, SparseVector, SubspaceBasis, quotient_projection, rank, vec_add
from shared.errors import AlgebraMismatch
from .bimodule import Bimodule, regular_bimodule

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BalancedTensor:
    """
    Result of balanced_tensor.

    Attributes:
        module: The quotient bimodule X (x)_B Y
        left: X
        right: Y
        projection: (dim X * dim Y) -> module.dim, full tensor index i*dim Y + j
        lifts: For each quotient basis element, the full tensor index lifting it
        relations_rank: Dimension of the balancing subspace
    """

    module: Bimodule
    left: Bimodule
    right: Bimodule
    projection: SparseMatrix
    lifts: Tuple[int, ...]
    relations_rank: int

    @property
    def dim(self) -> int:
        return self.module.dim

    def project(self, i: int, j: int) -> SparseVector:
        """Class of x_i (x) y_j in the quotient (shared vector, do not mutate)."""
        return self.projection.columns_view()[i * self.right.dim + j]

    def project_vector(self, full: Mapping[int, Fraction]) -> SparseVector:
        return self.projection.apply(full)

    def lift(self, t: int) -> Tuple[int, int]:
        """(i, j) with x_i (x) y_j mapping to quotient basis element t."""
        return divmod(self.lifts[t], self.right.dim)

    def induced_map(self, f: Callable[[int, int], Mapping[int, Fraction]], target_dim: int) -> SparseMatrix:
        """
        Matrix of the linear map on the quotient induced by a balanced map.

        Args:
            f: (i, j) -> image of x_i (x) y_j
            target_dim: Dimension of the target space
        """
        columns = [f(*self.lift(t)) for t in range(self.dim)]
        return SparseMatrix.from_columns(target_dim, columns) if columns else SparseMatrix(target_dim, 0)


def _balancing_relations(x: Bimodule, y: Bimodule) -> List[SparseVector]:
    dy = y.dim
    relations = []
    for k in range(x.right_algebra.dim):
        for i in range(x.dim):
            xb = x.right_column(k, i)
            for j in range(dy):
                by = y.left_column(k, j)
                if not xb and not by:
                    continue
                rel: SparseVector = {}
                for r, v in xb.items():
                    rel[r * dy + j] = v
                for s, v in by.items():
                    key = i * dy + s
                    nv = rel.get(key, 0) - v
                    if nv:
                        rel[key] = nv
                    else:
                        rel.pop(key, None)
                if rel:
                    relations.append(rel)
    return relations


def balanced_tensor(x: Bimodule, y: Bimodule, name: str = '') -> BalancedTensor:
    """
    X (x)_B Y for an A-B bimodule X and a B-C bimodule Y.

    The quotient basis is the echelon complement of the relation span, so
    every quotient basis element is the class of a pure tensor x_i (x) y_j.

    Raises:
        AlgebraMismatch: If X's right algebra is not Y's left algebra
    """
    if x.right_algebra is not y.left_algebra:
        raise AlgebraMismatch(f"cannot tensor {x.name} over {x.right_algebra.name} "
                              f"with {y.name} over {y.left_algebra.name}")
    dx, dy = x.dim, y.dim
    full = dx * dy
    sub = SubspaceBasis.span(_balancing_relations(x, y), full)
    proj, section = quotient_projection(sub, full)
    lifts = tuple(next(iter(col)) for col in section.columns_view())
    q = len(lifts)
    proj_cols = proj.columns_view()

    def outer_left(k: int) -> SparseMatrix:
        columns = []
        for m in lifts:
            i, j = divmod(m, dy)
            image: SparseVector = {}
            for r, v in x.left_column(k, i).items():
                vec_add(image, proj_cols[r * dy + j], v)
            columns.append(image)
        return SparseMatrix.from_columns(q, columns) if columns else SparseMatrix(q, 0)

    def outer_right(k: int) -> SparseMatrix:
        columns = []
        for m in lifts:
            i, j = divmod(m, dy)
            image: SparseVector = {}
            for s, v in y.right_column(k, j).items():
                vec_add(image, proj_cols[i * dy + s], v)
            columns.append(image)
        return SparseMatrix.from_columns(q, columns) if columns else SparseMatrix(q, 0)

    left = [outer_left(k) for k in range(x.left_algebra.dim)]
    right = [outer_right(k) for k in range(y.right_algebra.dim)]
    names = tuple(f"{x.basis_names[m // dy]}⊗{y.basis_names[m % dy]}" for m in lifts)
    module = Bimodule(x.left_algebra, y.right_algebra, q, left, right, names,
                      name or f"{x.name}⊗{y.name}")
    logger.debug(f"{module.name}: {full} pure tensors, relations of rank {sub.dim}, quotient {q}")
    return BalancedTensor(module, x, y, proj, lifts, sub.dim)


@dataclass(frozen=True)
class InducednessWitness:
    """Outcome of inducedness_check; truthy when the module is induced."""

    induced: bool
    tensor_dim: int
    module_dim: int
    rank: int

    def __bool__(self) -> bool:
        return self.induced


def inducedness_check(x: Bimodule) -> InducednessWitness:
    """
    Is A (x)_A X (x)_B B -> X, a (x) x (x) b -> a.x.b, an isomorphism?

    Returns:
        InducednessWitness with the tensor dimension, dim X and the rank of
        the multiplication map
    """
    a, b = x.left_algebra, x.right_algebra
    first = balanced_tensor(regular_bimodule(a, verify=False), x)
    second = balanced_tensor(first.module, regular_bimodule(b, verify=False))

    def multiply(u: int, k: int) -> SparseVector:
        i, j = first.lift(u)
        return x.right_action[k].apply(x.left_column(i, j))

    matrix = second.induced_map(multiply, x.dim)
    r = rank(matrix)
    witness = InducednessWitness(second.dim == x.dim == r, second.dim, x.dim, r)
    logger.debug(f"Inducedness of {x.name}: {witness}")
    return witness
