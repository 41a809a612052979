"""
Bimodule - Bimodules

Finite-dimensional bimodules given by action matrices, bimodule maps, and
the standard examples (regular, trivial, one-dimensional, dual, corners).
"""

import logging
from dataclasses import InitVar, dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Sequence, Tuple

from algebra import AlgebraElement, FiniteAlgebra, format_vector
from linalg import SparseMatrix, SparseVector, SubspaceBasis, image_basis, rank, vec_add
from shared.errors import ActionAxiomError, AlgebraMismatch, NotIdempotent

logger = logging.getLogger(__name__)


def _combination(matrices: Sequence[SparseMatrix], coords: Mapping[int, Fraction], dim: int) -> SparseMatrix:
    out = SparseMatrix(dim, dim)
    for k, c in coords.items():
        if c:
            out = out + matrices[k].scale(c)
    return out


@dataclass(frozen=True, eq=False)
class Bimodule:
    """
    An A-B bimodule X with basis x_0 .. x_{dim-1}.

    Actions are matrices on coordinate columns: a_k . x = left_action[k] @ x
    and x . b_k = right_action[k] @ x.

    Attributes:
        left_algebra: A
        right_algebra: B
        dim: dim X
        left_action: One dim x dim matrix per basis element of A
        right_action: One dim x dim matrix per basis element of B
        basis_names: Display names
        name: Display name used in reports
    """

    left_algebra: FiniteAlgebra
    right_algebra: FiniteAlgebra
    dim: int
    left_action: Tuple[SparseMatrix, ...]
    right_action: Tuple[SparseMatrix, ...]
    basis_names: Tuple[str, ...] = ()
    name: str = 'X'
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool):
        object.__setattr__(self, 'left_action', tuple(self.left_action))
        object.__setattr__(self, 'right_action', tuple(self.right_action))
        names = tuple(self.basis_names) or tuple(f"x{k}" for k in range(self.dim))
        object.__setattr__(self, 'basis_names', names)
        if len(names) != self.dim:
            raise ActionAxiomError(f"{len(names)} basis names for a {self.dim}-dimensional module")
        if len(self.left_action) != self.left_algebra.dim or len(self.right_action) != self.right_algebra.dim:
            raise ActionAxiomError(f"{self.name}: one action matrix per algebra basis element is required")
        for m in self.left_action + self.right_action:
            if m.shape != (self.dim, self.dim):
                raise ActionAxiomError(f"{self.name}: action matrix of shape {m.shape}, expected {self.dim}x{self.dim}")
        if verify:
            self.check_axioms()

    def check_axioms(self) -> None:
        """
        Verify L(ab) = L(a)L(b), R(ab) = R(b)R(a) and L(a)R(b) = R(b)L(a).

        Raises:
            ActionAxiomError: Naming the failing pair of basis elements
        """
        a, b = self.left_algebra, self.right_algebra
        L, R = self.left_action, self.right_action
        for (i, j), vec in a.products.items():
            if L[i] @ L[j] != _combination(L, vec, self.dim):
                raise ActionAxiomError(f"{self.name}: left action is not multiplicative on "
                                       f"({a.basis_names[i]}, {a.basis_names[j]})")
        for i in range(a.dim):
            for j in range(a.dim):
                if (i, j) not in a.products and not (L[i] @ L[j]).is_zero():
                    raise ActionAxiomError(f"{self.name}: left action is not multiplicative on "
                                           f"({a.basis_names[i]}, {a.basis_names[j]})")
        for i in range(b.dim):
            for j in range(b.dim):
                expected = _combination(R, b.products.get((i, j), {}), self.dim)
                if R[j] @ R[i] != expected:
                    raise ActionAxiomError(f"{self.name}: right action is not multiplicative on "
                                           f"({b.basis_names[i]}, {b.basis_names[j]})")
        for i in range(a.dim):
            for j in range(b.dim):
                if L[i] @ R[j] != R[j] @ L[i]:
                    raise ActionAxiomError(f"{self.name}: actions of {a.basis_names[i]} and "
                                           f"{b.basis_names[j]} do not commute")

    # === Actions ===

    def left_matrix(self, coords: Mapping[int, Fraction]) -> SparseMatrix:
        return _combination(self.left_action, coords, self.dim)

    def right_matrix(self, coords: Mapping[int, Fraction]) -> SparseMatrix:
        return _combination(self.right_action, coords, self.dim)

    def act_left(self, a: Mapping[int, Fraction], x: Mapping[int, Fraction]) -> SparseVector:
        """a . x for coordinate vectors a in A and x in X."""
        out: SparseVector = {}
        for k, c in a.items():
            if c:
                vec_add(out, self.left_action[k].apply(x), c)
        return out

    def act_right(self, x: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> SparseVector:
        """x . b for coordinate vectors x in X and b in B."""
        out: SparseVector = {}
        for k, c in b.items():
            if c:
                vec_add(out, self.right_action[k].apply(x), c)
        return out

    def left_column(self, k: int, j: int) -> SparseVector:
        """a_k . x_j as a shared sparse vector (do not mutate)."""
        return self.left_action[k].columns_view()[j]

    def right_column(self, k: int, j: int) -> SparseVector:
        """x_j . b_k as a shared sparse vector (do not mutate)."""
        return self.right_action[k].columns_view()[j]

    def format_vector(self, vec: Mapping[int, Fraction]) -> str:
        return format_vector(vec, self.basis_names)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.dim))

    def __repr__(self) -> str:
        return f"Bimodule({self.name}: {self.left_algebra.name}-{self.right_algebra.name}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class BimoduleMap:
    """A linear map source -> target (target.dim x source.dim matrix) intertwining both actions."""

    source: Bimodule
    target: Bimodule
    matrix: SparseMatrix
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ActionAxiomError(f"map matrix has shape {self.matrix.shape}, "
                                   f"expected {self.target.dim}x{self.source.dim}")
        if self.source.left_algebra is not self.target.left_algebra or \
                self.source.right_algebra is not self.target.right_algebra:
            raise AlgebraMismatch("bimodule map between modules over different algebras")
        if verify:
            self.check_intertwining()

    def check_intertwining(self) -> None:
        m, src, tgt = self.matrix, self.source, self.target
        for k in range(src.left_algebra.dim):
            if tgt.left_action[k] @ m != m @ src.left_action[k]:
                raise ActionAxiomError(f"map does not commute with the left action of "
                                       f"{src.left_algebra.basis_names[k]}")
        for k in range(src.right_algebra.dim):
            if tgt.right_action[k] @ m != m @ src.right_action[k]:
                raise ActionAxiomError(f"map does not commute with the right action of "
                                       f"{src.right_algebra.basis_names[k]}")

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim == self.rank


# === Constructions ===

def regular_bimodule(a: FiniteAlgebra, verify: bool = True) -> Bimodule:
    """A as an A-A bimodule by left and right multiplication."""
    left = [a.left_multiplication({k: 1}) for k in range(a.dim)]
    right = [a.right_multiplication({k: 1}) for k in range(a.dim)]
    return Bimodule(a, a, a.dim, left, right, a.basis_names, a.name, verify=verify)


def trivial_bimodule(a: FiniteAlgebra, dim: int = 1, right: Optional[FiniteAlgebra] = None) -> Bimodule:
    """A dim-dimensional module on which both algebras act by zero."""
    b = right or a
    zero = SparseMatrix(dim, dim)
    return Bimodule(a, b, dim, [zero] * a.dim, [zero] * b.dim, (), f"triv{dim}")


def one_dimensional_bimodule(a: FiniteAlgebra, left_character: Sequence[object],
                             right_character: Sequence[object],
                             right: Optional[FiniteAlgebra] = None, name: str = 'chi') -> Bimodule:
    """
    Q with a_k acting by left_character[k] on the left and right_character[k]
    on the right. The axioms hold exactly when both are algebra characters.
    """
    b = right or a
    left = [SparseMatrix(1, 1, {(0, 0): c}) for c in left_character]
    rgt = [SparseMatrix(1, 1, {(0, 0): c}) for c in right_character]
    return Bimodule(a, b, 1, left, rgt, ('1',), name)


def augmentation_bimodule(a: FiniteAlgebra, name: str = 'aug') -> Bimodule:
    """Q on which every basis element acts by 1 on both sides (semigroup algebras)."""
    ones = [1] * a.dim
    return one_dimensional_bimodule(a, ones, ones, name=name)


def dual_bimodule(x: Bimodule) -> Bimodule:
    """
    X* for an A-B bimodule X, a B-A bimodule in the dual basis.

    (b . f)(x) = f(x . b) and (f . a)(x) = f(a . x).
    """
    left = [m.transpose() for m in x.right_action]
    right = [m.transpose() for m in x.left_action]
    names = tuple(f"{n}*" for n in x.basis_names)
    return Bimodule(x.right_algebra, x.left_algebra, x.dim, left, right, names, f"{x.name}*", verify=False)


def submodule_actions(a: FiniteAlgebra, basis: SubspaceBasis, vector_product) -> Tuple[SparseMatrix, ...]:
    """Matrices of v -> vector_product(e_k, v) restricted to an invariant subspace, in its basis."""
    mats = []
    n = basis.dim
    for k in range(a.dim):
        columns = [basis.coordinates(vector_product(k, v)) for v in basis.vectors]
        entries = {(r, c): val for c, col in enumerate(columns) for r, val in enumerate(col) if val}
        mats.append(SparseMatrix(n, n, entries))
    return tuple(mats)


def _subspace_names(a: FiniteAlgebra, basis: SubspaceBasis) -> Tuple[str, ...]:
    return tuple(a.format_vector(v) for v in basis.vectors)


@dataclass(frozen=True, eq=False)
class CornerModules:
    """
    P = eA, Q = Ae and B = eAe for an idempotent e.

    Unpacks as (P, Q, B). The *_basis fields embed each space into A.
    """

    P: Bimodule
    Q: Bimodule
    B: FiniteAlgebra
    p_basis: SubspaceBasis
    q_basis: SubspaceBasis
    b_basis: SubspaceBasis
    idempotent: AlgebraElement

    def __iter__(self):
        return iter((self.P, self.Q, self.B))


def corner_modules(a: FiniteAlgebra, e: AlgebraElement) -> CornerModules:
    """
    Corner bimodules of an idempotent.

    P = eA is a B-A bimodule, Q = Ae an A-B bimodule, and B = eAe an
    algebra with unit e.

    Raises:
        AlgebraMismatch: If e is not an element of a
        NotIdempotent: If e*e != e
    """
    if e.algebra is not a:
        raise AlgebraMismatch(f"idempotent lives in {e.algebra.name}, not {a.name}")
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent in {a.name}")
    left_e = a.left_multiplication(e.coords)
    right_e = a.right_multiplication(e.coords)
    p_basis = image_basis(left_e)
    q_basis = image_basis(right_e)
    b_basis = image_basis(left_e @ right_e)

    b_products = {}
    for i, u in enumerate(b_basis.vectors):
        for j, v in enumerate(b_basis.vectors):
            coords = b_basis.coordinates(a.mul_vectors(u, v))
            vec = {k: c for k, c in enumerate(coords) if c}
            if vec:
                b_products[(i, j)] = vec
    unit = {k: c for k, c in enumerate(b_basis.coordinates(e.coords)) if c}
    b = FiniteAlgebra(b_basis.dim, b_products, _subspace_names(a, b_basis), unit, f"e{a.name}e")

    def left_by_b(k, v):
        return a.mul_vectors(b_basis.vectors[k], v)

    def right_by_b(k, v):
        return a.mul_vectors(v, b_basis.vectors[k])

    def left_by_a(k, v):
        return a.mul_vectors({k: 1}, v)

    def right_by_a(k, v):
        return a.mul_vectors(v, {k: 1})

    p = Bimodule(b, a, p_basis.dim, submodule_actions(b, p_basis, left_by_b),
                 submodule_actions(a, p_basis, right_by_a), _subspace_names(a, p_basis), 'P')
    q = Bimodule(a, b, q_basis.dim, submodule_actions(a, q_basis, left_by_a),
                 submodule_actions(b, q_basis, right_by_b), _subspace_names(a, q_basis), 'Q')
    logger.debug(f"Corners of {a.name} at {e}: dim P={p.dim}, dim Q={q.dim}, dim B={b.dim}")
    return CornerModules(p, q, b, p_basis, q_basis, b_basis, e)
