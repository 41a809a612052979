"""
Groups - Algebra Core

Finite groups presented by their Cayley tables.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from shared.errors import BadShape, NoIdentity, NoInverse, NotAssociative, ValidationError

logger = logging.getLogger(__name__)


def table_associativity_violation(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """
    First triple (x, y, z) with (xy)z != x(yz), or None.

    Works on any square table of indices (group or semigroup), vectorized
    one x at a time: t[t[x], :] against t[x][t].
    """
    n = table.shape[0]
    for x in range(n):
        left = table[table[x], :]     # (xy)z indexed [y, z]
        right = table[x][table]       # x(yz) indexed [y, z]
        bad = np.argwhere(left != right)
        if bad.size:
            y, z = bad[0]
            return x, int(y), int(z)
    return None


@dataclass(frozen=True, eq=False)
class GroupTable:
    """
    A finite group given by its multiplication table.

    Attributes:
        order: Number of elements
        table: table[g][h] is the index of g*h
        identity: Index of the identity element
        inverses: inverses[g] is the index of g^-1
        element_names: Display name of each element
    """

    order: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverses: Tuple[int, ...]
    element_names: Tuple[str, ...]
    _name_index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_name_index', {n: k for k, n in enumerate(self.element_names)})

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def is_abelian(self) -> bool:
        return all(self.table[g][h] == self.table[h][g]
                   for g in range(self.order) for h in range(g + 1, self.order))

    def conjugacy_classes(self) -> List[List[int]]:
        """Orbits of the group acting on itself by conjugation."""
        seen = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            orbit = sorted({self.mul(self.mul(h, g), self.inv(h)) for h in range(self.order)})
            seen.update(orbit)
            classes.append(orbit)
        return classes

    def index_of(self, name: str) -> int:
        """
        Element index for a display name or a decimal index string.

        Raises:
            KeyError: If nothing matches
        """
        if name in self._name_index:
            return self._name_index[name]
        if name.isdigit() and int(name) < self.order:
            return int(name)
        raise KeyError(name)

    def name(self, g: int) -> str:
        return self.element_names[g]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return (self.table, self.identity, self.element_names) == \
            (other.table, other.identity, other.element_names)

    def __hash__(self):
        return hash((self.table, self.identity))


def group_from_table(table: Sequence[Sequence[int]], identity: Optional[int] = None,
                     names: Optional[Sequence[str]] = None) -> GroupTable:
    """
    Validate a Cayley table and build a GroupTable.

    Checks run in order: shape, identity, inverses, associativity.

    Args:
        table: Square table of element indices
        identity: Index of the identity; found by search if omitted
        names: Display names; defaults to "0", "1", ...

    Raises:
        BadShape: Table not square or entries out of range
        NoIdentity: No two-sided identity (or the given one is not)
        NoInverse: Some element has no two-sided inverse
        NotAssociative: A triple violates associativity
    """
    n = len(table)
    if n == 0:
        raise BadShape("group table is empty")
    if any(len(row) != n for row in table):
        raise BadShape(f"group table is not {n}x{n}")
    arr = np.array(table, dtype=np.int64)
    if arr.min() < 0 or arr.max() >= n:
        raise BadShape(f"group table entries must lie in 0..{n - 1}")
    if names is not None and len(names) != n:
        raise BadShape(f"{len(names)} names for {n} elements")
    names = tuple(str(x) for x in names) if names is not None else tuple(str(k) for k in range(n))
    if len(set(names)) != n:
        raise BadShape("element names must be distinct")

    ids = np.arange(n)
    candidates = [identity] if identity is not None else range(n)
    unit = next((u for u in candidates
                 if 0 <= u < n and (arr[u] == ids).all() and (arr[:, u] == ids).all()), None)
    if unit is None:
        raise NoIdentity("table has no two-sided identity" if identity is None
                         else f"element {identity} is not a two-sided identity")

    inverses = []
    for g in range(n):
        inv = [h for h in range(n) if arr[g, h] == unit and arr[h, g] == unit]
        if not inv:
            raise NoInverse(names[g])
        inverses.append(inv[0])

    violation = table_associativity_violation(arr)
    if violation is not None:
        x, y, z = violation
        raise NotAssociative((names[x], names[y], names[z]))

    logger.debug(f"Validated group of order {n}")
    return GroupTable(
        order=n,
        table=tuple(tuple(int(v) for v in row) for row in arr),
        identity=int(unit),
        inverses=tuple(inverses),
        element_names=names,
    )


def cyclic_group(n: int) -> GroupTable:
    """C_n with generator "a"; element k is a^k and 0 is the identity "e"."""
    if n < 1:
        raise ValidationError(f"cyclic group order must be >= 1, got {n}")
    names = ['e'] + ['a' if k == 1 else f'a^{k}' for k in range(1, n)]
    table = [[(g + h) % n for h in range(n)] for g in range(n)]
    return group_from_table(table, 0, names)


def symmetric_group_3() -> GroupTable:
    """S_3 as permutations of {1, 2, 3}; product (gh)(x) = g(h(x))."""
    perms = {
        'e': (0, 1, 2),
        '(12)': (1, 0, 2),
        '(13)': (2, 1, 0),
        '(23)': (0, 2, 1),
        '(123)': (1, 2, 0),
        '(132)': (2, 0, 1),
    }
    names = list(perms)
    lookup = {p: k for k, p in enumerate(perms.values())}
    elems = list(perms.values())
    table = [[lookup[tuple(g[h[x]] for x in range(3))] for h in elems] for g in elems]
    return group_from_table(table, 0, names)


def klein_four_group() -> GroupTable:
    names = ['e', 'a', 'b', 'c']
    table = [[g ^ h for h in range(4)] for g in range(4)]
    return group_from_table(table, 0, names)

