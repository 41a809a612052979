"""
Subspace - Exact Linear Algebra

Subspaces of Q^n in reduced row echelon form, kernels, images, quotients
and inverses.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from shared.errors import SingularMatrix, ValidationError
from .sparse_matrix import SparseMatrix, SparseVector, vec_add, vec_clean

logger = logging.getLogger(__name__)


def echelonize(vectors: Iterable[Mapping[int, object]]) -> Dict[int, SparseVector]:
    """
    Fully reduced echelon basis of the span of vectors.

    Returns:
        {pivot: vector} where vector[pivot] == 1 and every vector is zero at
        all other pivots
    """
    basis: Dict[int, SparseVector] = {}
    for raw in vectors:
        w = vec_clean(raw)
        # basis vectors vanish at each other's pivots, one pass suffices
        for p in [p for p in w if p in basis]:
            c = w.get(p)
            if c:
                vec_add(w, basis[p], -c)
        if not w:
            continue
        piv = min(w)
        inv = 1 / w[piv]
        w = {k: v * inv for k, v in w.items()}
        for b in basis.values():
            c = b.get(piv)
            if c:
                vec_add(b, w, -c)
        basis[piv] = w
    return basis


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """
    A subspace of Q^ambient_dim given by its reduced echelon basis.

    Attributes:
        ambient_dim: Dimension n of the ambient space
        vectors: Basis vectors sorted by pivot
        pivots: Pivot (leading) index of each basis vector
    """

    ambient_dim: int
    vectors: Tuple[SparseVector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Mapping[int, object]], ambient_dim: int) -> 'SubspaceBasis':
        basis = echelonize(vectors)
        for p, v in basis.items():
            if max(v) >= ambient_dim:
                raise ValidationError(f"vector index {max(v)} outside ambient dimension {ambient_dim}")
        pivots = tuple(sorted(basis))
        return cls(ambient_dim, tuple(basis[p] for p in pivots), pivots)

    @classmethod
    def whole(cls, n: int) -> 'SubspaceBasis':
        return cls(n, tuple({i: Fraction(1)} for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, object]) -> SparseVector:
        """Residual of vec after removing its pivot coordinates along the basis."""
        w = vec_clean(vec)
        index = {p: k for k, p in enumerate(self.pivots)}
        for p in [p for p in w if p in index]:
            c = w.get(p)
            if c:
                vec_add(w, self.vectors[index[p]], -c)
        return w

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: Mapping[int, object]) -> List[Fraction]:
        """
        Coordinates of vec in this basis.

        Raises:
            ValidationError: If vec is not in the subspace
        """
        if not self.contains(vec):
            raise ValidationError("vector is not in the subspace")
        return [Fraction(vec.get(p, 0)) for p in self.pivots]

    def to_matrix(self) -> SparseMatrix:
        """ambient_dim x dim matrix whose columns are the basis vectors."""
        return SparseMatrix.from_columns(self.ambient_dim, self.vectors) if self.vectors \
            else SparseMatrix(self.ambient_dim, 0)

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


# === Kernel / image ===

def image_basis(m: SparseMatrix) -> SubspaceBasis:
    """Basis of the column space of m."""
    return SubspaceBasis.span(m.column_vectors(), m.rows)


def kernel_basis(m: SparseMatrix) -> SubspaceBasis:
    """Basis of {v : m v = 0}."""
    rref = echelonize(m.row_vectors())
    free = [c for c in range(m.cols) if c not in rref]
    kernel = []
    for f in free:
        v: SparseVector = {f: Fraction(1)}
        for p, row in rref.items():
            c = row.get(f)
            if c:
                v[p] = -c
        kernel.append(v)
    return SubspaceBasis.span(kernel, m.cols)


def quotient_dim(sub: SubspaceBasis, n: int) -> int:
    """dim(Q^n / sub)."""
    if sub.ambient_dim != n:
        raise ValidationError(f"subspace lives in dimension {sub.ambient_dim}, not {n}")
    return n - sub.dim


def quotient_projection(sub: SubspaceBasis, n: int) -> Tuple[SparseMatrix, SparseMatrix]:
    """
    Projection onto Q^n / sub and a linear section.

    The quotient is identified with the non-pivot coordinates of sub.

    Returns:
        (projection, section) with projection of shape (n - dim) x n,
        section of shape n x (n - dim), projection @ section = identity,
        and projection vanishing on sub
    """
    q = quotient_dim(sub, n)
    pivot_set = set(sub.pivots)
    complement = [j for j in range(n) if j not in pivot_set]
    position = {j: k for k, j in enumerate(complement)}

    entries = {}
    for j in complement:
        entries[(position[j], j)] = 1
    for p, v in zip(sub.pivots, sub.vectors):
        # e_p = v - (non-pivot part of v), so pi(e_p) = -(non-pivot part)
        for k, c in v.items():
            if k != p:
                entries[(position[k], p)] = -c
    projection = SparseMatrix(q, n, entries)
    section = SparseMatrix(n, q, {(j, position[j]): 1 for j in complement})
    return projection, section


def inverse(m: SparseMatrix) -> SparseMatrix:
    """
    Exact inverse of a square matrix.

    Raises:
        SingularMatrix: If m is not square or not invertible
    """
    n = m.rows
    if m.cols != n:
        raise SingularMatrix(f"non-square matrix {m.shape} has no inverse")
    augmented = []
    for r, row in enumerate(m.row_vectors()):
        vec = dict(row)
        vec[n + r] = Fraction(1)
        augmented.append(vec)
    rref = echelonize(augmented)
    if sorted(rref)[:n] != list(range(n)) or len(rref) != n:
        raise SingularMatrix(f"matrix {m!r} is singular")
    entries = {}
    for j in range(n):
        for k, v in rref[j].items():
            if k >= n:
                entries[(j, k - n)] = v
    return SparseMatrix(n, n, entries)
