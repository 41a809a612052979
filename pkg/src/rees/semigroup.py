"""
Rees Semigroup - Rees Construction

The semigroup I x G x Lambda + {zero} with product
(i, g, l)(j, h, m) = (i, g p[l][j] h, m) when p[l][j] is not o, else zero.

Elements are indexed lexicographically by (i, g, lambda); the zero comes
last. Sandwich entries are group element indices, None standing for o.
"""

import logging
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from algebra import (
    FiniteAlgebra, GroupTable, reduced_semigroup_algebra, semigroup_algebra,
    table_associativity_violation,
)
from config import ASSOCIATIVITY_SAMPLES, EXHAUSTIVE_ASSOCIATIVITY_LIMIT, INSTANCE_SIZE_CAP, SEED
from shared.errors import BadShape, EmptyColumn, EmptyRow, NotAssociative, SizeGuardError

logger = logging.getLogger(__name__)

ZERO_NAME = '∅'

SandwichEntry = Optional[int]


class ReesElement(NamedTuple):
    """A nonzero element (i, g, lambda); the zero is represented by None."""
    i: int
    g: int
    lam: int


@dataclass(frozen=True, eq=False)
class ReesSemigroup:
    """
    A validated Rees semigroup; build it with rees_new.

    Attributes:
        group: The group G
        i_size: |I|
        lambda_size: |Lambda|
        sandwich: sandwich[lam][i] is p_{lambda i} (None for o)
        name: Instance name used in reports
    """

    group: GroupTable
    i_size: int
    lambda_size: int
    sandwich: Tuple[Tuple[SandwichEntry, ...], ...]
    name: str = 'S'

    # === Indexing ===

    @property
    def nonzero_size(self) -> int:
        """|I| * |G| * |Lambda|."""
        return self.i_size * self.group.order * self.lambda_size

    @property
    def size(self) -> int:
        return self.nonzero_size + 1

    @property
    def zero_index(self) -> int:
        return self.nonzero_size

    def index(self, x: Optional[ReesElement]) -> int:
        if x is None:
            return self.zero_index
        return (x.i * self.group.order + x.g) * self.lambda_size + x.lam

    def element(self, k: int) -> Optional[ReesElement]:
        if k == self.zero_index:
            return None
        if not 0 <= k < self.zero_index:
            raise IndexError(f"element index {k} outside 0..{self.zero_index}")
        rest, lam = divmod(k, self.lambda_size)
        i, g = divmod(rest, self.group.order)
        return ReesElement(i, g, lam)

    def elements(self) -> List[Optional[ReesElement]]:
        return [self.element(k) for k in range(self.size)]

    def entry(self, lam: int, i: int) -> SandwichEntry:
        return self.sandwich[lam][i]

    def element_name(self, x: Optional[ReesElement]) -> str:
        """Display name, 1-based: '(1, a, 2)' or the zero symbol."""
        if x is None:
            return ZERO_NAME
        return f"({x.i + 1}, {self.group.name(x.g)}, {x.lam + 1})"

    @cached_property
    def element_names(self) -> Tuple[str, ...]:
        return tuple(self.element_name(x) for x in self.elements())

    # === Product ===

    def mul(self, x: Optional[ReesElement], y: Optional[ReesElement]) -> Optional[ReesElement]:
        if x is None or y is None:
            return None
        p = self.sandwich[x.lam][y.i]
        if p is None:
            return None
        g = self.group
        return ReesElement(x.i, g.mul(g.mul(x.g, p), y.g), y.lam)

    def mul_index(self, a: int, b: int) -> int:
        return int(self.product_table[a, b])

    @cached_property
    def product_table(self) -> np.ndarray:
        """size x size table of product indices, zero index last."""
        g = np.array(self.group.table, dtype=np.int64)
        n, order, lsize = self.nonzero_size, self.group.order, self.lambda_size
        k = np.arange(n)
        lam = k % lsize
        gi = (k // lsize) % order
        ii = k // (lsize * order)
        sand = np.array([[-1 if p is None else p for p in row] for row in self.sandwich], dtype=np.int64)

        p = sand[lam[:, None], ii[None, :]]
        defined = p >= 0
        gp = g[gi[:, None], np.where(defined, p, 0)]
        prod_g = g[gp, gi[None, :]]
        prod = (ii[:, None] * order + prod_g) * lsize + lam[None, :]

        table = np.full((n + 1, n + 1), n, dtype=np.int64)
        table[:n, :n] = np.where(defined, prod, n)
        return table

    # === Algebras ===

    @cached_property
    def full_algebra(self) -> FiniteAlgebra:
        """l1(S), zero as the last basis element."""
        return semigroup_algebra(self.size, self.mul_index, self.element_names,
                                 name=f"l1({self.name})", verify=False)

    @cached_property
    def reduced_algebra(self) -> FiniteAlgebra:
        """A(S) = l1(S) / Q*zero."""
        return reduced_semigroup_algebra(self.size, self.mul_index, self.zero_index, self.element_names,
                                         name=f"A({self.name})", verify=False)

    def __repr__(self) -> str:
        return (f"ReesSemigroup({self.name}: |I|={self.i_size}, |G|={self.group.order}, "
                f"|Lambda|={self.lambda_size})")


def rees_mul(s: ReesSemigroup, x: Optional[ReesElement], y: Optional[ReesElement]) -> Optional[ReesElement]:
    """Product of two elements of s; None is the zero."""
    return s.mul(x, y)


def _check_associative(s: ReesSemigroup, seed: int) -> None:
    if s.size <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        violation = table_associativity_violation(s.product_table)
        how = 'exhaustive'
    else:
        table = s.product_table
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, s.size, size=(3, ASSOCIATIVITY_SAMPLES))
        bad = np.flatnonzero(table[table[x, y], z] != table[x, table[y, z]])
        violation = (int(x[bad[0]]), int(y[bad[0]]), int(z[bad[0]])) if bad.size else None
        how = f'{ASSOCIATIVITY_SAMPLES} sampled triples'
    if violation is not None:
        names = s.element_names
        raise NotAssociative(tuple(names[v] for v in violation), f"Rees product of {s.name}")
    logger.debug(f"{s.name}: associativity verified ({how})")


def _sandwich_entry(p, order: int, lam: int, i: int) -> SandwichEntry:
    if p is None:
        return None
    try:
        if isinstance(p, bool):
            raise TypeError
        index = operator.index(p)
    except TypeError:
        index = -1
    if not 0 <= index < order:
        raise BadShape(f"sandwich entry at lambda={lam + 1}, i={i + 1} is not a group element: {p!r}")
    return index


def rees_new(group: GroupTable, i_size: int, lambda_size: int,
             sandwich: Sequence[Sequence[SandwichEntry]], name: str = 'S',
             force: bool = False, seed: Optional[int] = None) -> ReesSemigroup:
    """
    Validate (I, Lambda, G, P) and build the Rees semigroup.

    Args:
        group: The group G
        i_size: |I| >= 1
        lambda_size: |Lambda| >= 1
        sandwich: lambda_size rows of i_size entries (group index or None)
        name: Instance name
        force: Skip the |I|*|G|*|Lambda| size guard
        seed: Seed for sampled associativity on large instances

    Returns:
        ReesSemigroup

    Raises:
        BadShape: Wrong sandwich shape or an entry that is not a group element
        EmptyRow: A row (a lambda) with only o entries
        EmptyColumn: A column (an i) with only o entries
        SizeGuardError: Instance above the configured cap without force
        NotAssociative: The product rule failed a triple
    """
    if i_size < 1 or lambda_size < 1:
        raise BadShape(f"index sets must be nonempty, got |I|={i_size}, |Lambda|={lambda_size}")
    if len(sandwich) != lambda_size or any(len(row) != i_size for row in sandwich):
        raise BadShape(f"sandwich must be {lambda_size} rows (Lambda) x {i_size} columns (I)")
    rows = []
    for lam, row in enumerate(sandwich):
        rows.append(tuple(_sandwich_entry(p, group.order, lam, i) for i, p in enumerate(row)))
    for lam, row in enumerate(rows):
        if all(p is None for p in row):
            raise EmptyRow(lam)
    for i in range(i_size):
        if all(rows[lam][i] is None for lam in range(lambda_size)):
            raise EmptyColumn(i)

    nonzero = i_size * group.order * lambda_size
    if nonzero > INSTANCE_SIZE_CAP and not force:
        raise SizeGuardError("instance |I|*|G|*|Lambda|", nonzero, INSTANCE_SIZE_CAP)

    s = ReesSemigroup(group, i_size, lambda_size, tuple(rows), name)
    _check_associative(s, SEED if seed is None else seed)
    logger.info(f"Built {s!r} with {s.size} elements")
    return s
