"""
Finite Algebra - Algebra Core

Finite-dimensional associative algebras over the rationals given by sparse
structure constants, their elements, and the standard constructions
(group algebras, semigroup algebras, unitization, direct sums, quotients).
"""

import logging
from dataclasses import InitVar, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from config import ASSOCIATIVITY_CHECK_THRESHOLD
from linalg import SparseMatrix, SparseVector, SubspaceBasis, quotient_projection, vec_add, vec_clean
from shared.errors import AlgebraMismatch, BadShape, NotAnIdeal, NotAssociative, ValidationError
from .groups import GroupTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """
    An associative algebra with basis e_0 .. e_{dim-1}.

    Attributes:
        dim: Dimension
        products: products[(i, j)] is the sparse vector e_i * e_j; missing
            pairs multiply to zero
        basis_names: Display name of each basis element
        unit: Coordinates of the two-sided unit, if the algebra has one
        name: Display name used in reports
    """

    dim: int
    products: Dict[Tuple[int, int], SparseVector]
    basis_names: Tuple[str, ...] = ()
    unit: Optional[SparseVector] = None
    name: str = 'A'
    verify: InitVar[bool] = True
    _left_index: Dict[int, List[Tuple[int, SparseVector]]] = field(init=False, repr=False)

    def __post_init__(self, verify: bool):
        clean = {}
        for (i, j), vec in self.products.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise BadShape(f"product index ({i}, {j}) outside dimension {self.dim}")
            vec = vec_clean(vec)
            if vec:
                if not all(0 <= k < self.dim for k in vec):
                    raise BadShape(f"product e{i}*e{j} leaves dimension {self.dim}")
                clean[(i, j)] = vec
        object.__setattr__(self, 'products', clean)
        names = tuple(self.basis_names) or tuple(f"e{k}" for k in range(self.dim))
        if len(names) != self.dim:
            raise BadShape(f"{len(names)} basis names for dimension {self.dim}")
        object.__setattr__(self, 'basis_names', names)
        if self.unit is not None:
            object.__setattr__(self, 'unit', vec_clean(self.unit))

        left_index: Dict[int, List[Tuple[int, SparseVector]]] = {}
        for (i, j), vec in sorted(clean.items()):
            left_index.setdefault(i, []).append((j, vec))
        object.__setattr__(self, '_left_index', left_index)

        if verify or self.dim <= ASSOCIATIVITY_CHECK_THRESHOLD:
            self.check_associative()
        if self.unit is not None:
            self.check_unit()

    # === Products ===

    def basis_product(self, i: int, j: int) -> SparseVector:
        """e_i * e_j; the returned dict is shared and must not be mutated."""
        return self.products.get((i, j), {})

    def right_products(self, i: int) -> List[Tuple[int, SparseVector]]:
        """All (j, e_i * e_j) with a nonzero product, j ascending."""
        return self._left_index.get(i, [])

    def mul_vectors(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> SparseVector:
        """Bilinear product of two coordinate vectors."""
        out: SparseVector = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if b:
                    p = self.products.get((i, j))
                    if p:
                        vec_add(out, p, a * b)
        return out

    def check_associative(self) -> None:
        """
        Raises:
            NotAssociative: Naming the first basis triple with (xy)z != x(yz)
        """
        for i in range(self.dim):
            for j in range(self.dim):
                eij = self.products.get((i, j), {})
                for k in range(self.dim):
                    left = self.mul_vectors(eij, {k: 1}) if eij else {}
                    ejk = self.products.get((j, k))
                    right = self.mul_vectors({i: 1}, ejk) if ejk else {}
                    if left != right:
                        raise NotAssociative(
                            (self.basis_names[i], self.basis_names[j], self.basis_names[k]),
                            f"in {self.name}")

    def check_unit(self) -> None:
        for k in range(self.dim):
            if self.mul_vectors(self.unit, {k: 1}) != {k: 1} or \
                    self.mul_vectors({k: 1}, self.unit) != {k: 1}:
                raise ValidationError(f"unit of {self.name} fails on basis element {self.basis_names[k]}")

    def is_commutative(self) -> bool:
        return all(self.products.get((j, i), {}) == vec for (i, j), vec in self.products.items())

    # === Matrices ===

    def left_multiplication(self, x: Mapping[int, Fraction]) -> SparseMatrix:
        """Matrix of y -> x*y."""
        return SparseMatrix.from_columns(self.dim, [self.mul_vectors(x, {j: 1}) for j in range(self.dim)]) \
            if self.dim else SparseMatrix(0, 0)

    def right_multiplication(self, x: Mapping[int, Fraction]) -> SparseMatrix:
        """Matrix of y -> y*x."""
        return SparseMatrix.from_columns(self.dim, [self.mul_vectors({j: 1}, x) for j in range(self.dim)]) \
            if self.dim else SparseMatrix(0, 0)

    def multiplication_map(self) -> SparseMatrix:
        """Matrix of A (x) A -> A; tensor index i*dim + j."""
        d = self.dim
        entries = {}
        for (i, j), vec in self.products.items():
            for k, v in vec.items():
                entries[(k, i * d + j)] = v
        return SparseMatrix(d, d * d, entries)

    # === Elements ===

    def element(self, coords: Mapping[int, object]) -> 'AlgebraElement':
        return AlgebraElement(self, vec_clean(coords))

    def basis_element(self, k: int) -> 'AlgebraElement':
        if not 0 <= k < self.dim:
            raise IndexError(f"basis index {k} outside dimension {self.dim}")
        return AlgebraElement(self, {k: Fraction(1)})

    def unit_element(self) -> Optional['AlgebraElement']:
        return None if self.unit is None else AlgebraElement(self, dict(self.unit))

    def format_vector(self, vec: Mapping[int, Fraction]) -> str:
        return format_vector(vec, self.basis_names)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.dim))

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name}, dim={self.dim}, unital={self.unit is not None})"


def format_vector(vec: Mapping[int, Fraction], names: Sequence[str]) -> str:
    """Human-readable linear combination, e.g. '1/2*(1, e, 1) - (2, a, 1)'."""
    if not vec:
        return '0'
    parts = []
    for k in sorted(vec):
        c = vec[k]
        sign = '-' if c < 0 else '+'
        mag = abs(c)
        term = names[k] if mag == 1 else f"{mag}*{names[k]}"
        parts.append((sign, term))
    text = ('-' if parts[0][0] == '-' else '') + parts[0][1]
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """An element of a FiniteAlgebra by its sparse coordinates."""

    algebra: FiniteAlgebra
    coords: SparseVector

    def _same(self, other: 'AlgebraElement') -> None:
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise AlgebraMismatch(f"elements of different algebras: {self.algebra.name} and "
                                  f"{getattr(getattr(other, 'algebra', None), 'name', type(other).__name__)}")

    def multiply(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._same(other)
        return AlgebraElement(self.algebra, self.algebra.mul_vectors(self.coords, other.coords))

    __mul__ = multiply

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._same(other)
        return AlgebraElement(self.algebra, vec_add(dict(self.coords), other.coords))

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._same(other)
        return AlgebraElement(self.algebra, vec_add(dict(self.coords), other.coords, -1))

    def __rmul__(self, scalar) -> 'AlgebraElement':
        return AlgebraElement(self.algebra, vec_clean({k: v * scalar for k, v in self.coords.items()}))

    def __neg__(self) -> 'AlgebraElement':
        return (-1) * self

    def is_zero(self) -> bool:
        return not self.coords

    def is_idempotent(self) -> bool:
        return self.multiply(self).coords == self.coords

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and other.coords == self.coords

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.coords.items())))

    def __str__(self) -> str:
        return self.algebra.format_vector(self.coords)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.algebra.name}: {self})"


# === Constructions ===

def group_algebra(g: GroupTable, name: str = 'Q[G]') -> FiniteAlgebra:
    """Q[G]: basis G, e_g * e_h = e_{gh}, unit e_identity."""
    products = {(x, y): {g.mul(x, y): 1} for x in range(g.order) for y in range(g.order)}
    return FiniteAlgebra(g.order, products, g.element_names, {g.identity: 1}, name, verify=False)


def semigroup_algebra(size: int, product: Callable[[int, int], int],
                      names: Optional[Sequence[str]] = None, name: str = 'l1(T)',
                      verify: bool = True) -> FiniteAlgebra:
    """
    l1(T) of a finite semigroup T = {0, .., size-1}.

    Args:
        size: |T|
        product: (s, t) -> index of st
        names: Display names
        name: Algebra name
        verify: Check associativity even above the size threshold
    """
    products = {(s, t): {product(s, t): 1} for s in range(size) for t in range(size)}
    return FiniteAlgebra(size, products, tuple(names or ()), None, name, verify=verify)


def reduced_semigroup_algebra(size: int, product: Callable[[int, int], int], zero: int,
                              names: Optional[Sequence[str]] = None, name: str = 'A(T)',
                              verify: bool = True) -> FiniteAlgebra:
    """
    A(T) = l1(T) / Q*zero for a semigroup with absorbing element zero.

    Basis is T without zero, in order; products equal to zero become 0.
    """
    keep = [t for t in range(size) if t != zero]
    position = {t: k for k, t in enumerate(keep)}
    products = {}
    for s in keep:
        for t in keep:
            st = product(s, t)
            if st != zero:
                products[(position[s], position[t])] = {position[st]: 1}
    kept_names = tuple(names[t] for t in keep) if names else ()
    return FiniteAlgebra(len(keep), products, kept_names, None, name, verify=verify)


def unitize(a: FiniteAlgebra) -> FiniteAlgebra:
    """A#: adjoin a new unit "1" at the last index, even if A is unital."""
    u = a.dim
    products = {k: dict(v) for k, v in a.products.items()}
    for j in range(a.dim):
        products[(u, j)] = {j: 1}
        products[(j, u)] = {j: 1}
    products[(u, u)] = {u: 1}
    return FiniteAlgebra(a.dim + 1, products, a.basis_names + ('1',), {u: 1}, f"{a.name}#", verify=False)


def direct_sum(a: FiniteAlgebra, b: FiniteAlgebra, name: Optional[str] = None) -> FiniteAlgebra:
    """A (+) B with A's basis first; cross products vanish."""
    off = a.dim
    products = {k: dict(v) for k, v in a.products.items()}
    for (i, j), vec in b.products.items():
        products[(i + off, j + off)] = {k + off: c for k, c in vec.items()}
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = dict(a.unit)
        unit.update({k + off: c for k, c in b.unit.items()})
    names = a.basis_names + tuple(f"{n}'" if n in a.basis_names else n for n in b.basis_names)
    return FiniteAlgebra(a.dim + b.dim, products, names, unit, name or f"{a.name}+{b.name}", verify=False)


def zero_algebra(dim: int, name: str = 'zero') -> FiniteAlgebra:
    """dim-dimensional algebra with identically zero multiplication."""
    return FiniteAlgebra(dim, {}, tuple(f"z{k + 1}" if dim > 1 else 'z' for k in range(dim)), None, name)


def quotient_algebra(a: FiniteAlgebra, ideal: SubspaceBasis, name: Optional[str] = None) -> FiniteAlgebra:
    """
    A / J for a two-sided ideal J.

    The quotient basis is the echelon complement of J (the non-pivot basis
    elements of A, keeping their names).

    Raises:
        NotAnIdeal: If J * A or A * J leaves J
    """
    if ideal.ambient_dim != a.dim:
        raise AlgebraMismatch(f"ideal lives in dimension {ideal.ambient_dim}, algebra {a.name} has {a.dim}")
    for v in ideal.vectors:
        for k in range(a.dim):
            if not ideal.contains(a.mul_vectors(v, {k: 1})) or not ideal.contains(a.mul_vectors({k: 1}, v)):
                raise NotAnIdeal(f"subspace is not a two-sided ideal of {a.name} "
                                 f"(fails against {a.basis_names[k]})")
    proj, section = quotient_projection(ideal, a.dim)
    lifts = section.column_vectors()
    q = proj.rows
    products = {}
    for i in range(q):
        for j in range(q):
            vec = proj.apply(a.mul_vectors(lifts[i], lifts[j]))
            if vec:
                products[(i, j)] = vec
    names = tuple(a.basis_names[next(iter(col))] for col in lifts)
    unit = proj.apply(a.unit) if a.unit is not None else None
    logger.debug(f"Quotient of {a.name} by a {ideal.dim}-dimensional ideal has dimension {q}")
    return FiniteAlgebra(q, products, names, unit, name or f"{a.name}/J", verify=False)
