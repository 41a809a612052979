"""
Sparse Matrix - Exact Linear Algebra

Immutable sparse matrices and sparse vectors over the rationals.

A sparse vector is a plain dict {index: Fraction} without zero values.
Matrices act on column vectors: (m @ v)[r] = sum_c m[r, c] * v[c].
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

logger = logging.getLogger(__name__)

Rational = Fraction
SparseVector = Dict[int, Fraction]


# === Sparse vector helpers ===

def vec_add(target: SparseVector, source: Mapping[int, Fraction], scale=1) -> SparseVector:
    """Add scale * source into target in place and return target."""
    if not scale:
        return target
    for k, v in source.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)
    return target


def vec_scale(vec: Mapping[int, Fraction], scale) -> SparseVector:
    """Return scale * vec as a new sparse vector."""
    if not scale:
        return {}
    return {k: v * scale for k, v in vec.items()}


def vec_clean(vec: Mapping[int, Fraction]) -> SparseVector:
    """Drop zero entries and coerce values to Fraction."""
    return {k: Fraction(v) for k, v in vec.items() if v}


class SparseMatrix:
    """
    Immutable sparse matrix with exact rational entries.

    Entries are stored as {(row, col): Fraction}; zeros are never stored.
    """

    __slots__ = ('_rows', '_cols', '_entries', '_col_cache', '_row_cache')

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        """
        Build a matrix.

        Args:
            rows: Number of rows
            cols: Number of columns
            entries: Mapping (row, col) -> value; zero values are dropped
        """
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape {rows}x{cols}")
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            if v:
                clean[(r, c)] = Fraction(v)
        self._rows = rows
        self._cols = cols
        self._entries = clean
        self._col_cache = None
        self._row_cache = None

    # === Constructors ===

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Mapping[int, object]]) -> 'SparseMatrix':
        """Build a matrix from a list of sparse column vectors."""
        entries = {}
        ncols = 0
        for c, col in enumerate(columns):
            ncols = c + 1
            for r, v in col.items():
                if v:
                    entries[(r, c)] = v
        return cls(rows, ncols, entries)

    @classmethod
    def from_rows(cls, cols: int, rows: Iterable[Mapping[int, object]]) -> 'SparseMatrix':
        """Build a matrix from a list of sparse row vectors."""
        entries = {}
        nrows = 0
        for r, row in enumerate(rows):
            nrows = r + 1
            for c, v in row.items():
                if v:
                    entries[(r, c)] = v
        return cls(nrows, cols, entries)

    @classmethod
    def from_dense(cls, data: List[List[object]]) -> 'SparseMatrix':
        """Build a matrix from a list of rows."""
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> 'SparseMatrix':
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> 'SparseMatrix':
        return cls(rows, cols)

    # === Accessors ===

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        """Copy of the stored entries."""
        return dict(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        r, c = key
        if not (0 <= r < self._rows and 0 <= c < self._cols):
            raise IndexError(f"index ({r}, {c}) outside {self._rows}x{self._cols}")
        return self._entries.get((r, c), Fraction(0))

    def column(self, c: int) -> SparseVector:
        """Sparse column vector c (a copy)."""
        return dict(self._columns()[c])

    def row(self, r: int) -> SparseVector:
        """Sparse row vector r (a copy)."""
        return dict(self._rows_index()[r])

    def columns_view(self) -> List[SparseVector]:
        """Cached column vectors; shared, callers must not mutate them."""
        return self._columns()

    def column_vectors(self) -> List[SparseVector]:
        return [dict(col) for col in self._columns()]

    def row_vectors(self) -> List[SparseVector]:
        return [dict(row) for row in self._rows_index()]

    def _columns(self) -> List[SparseVector]:
        if self._col_cache is None:
            cols: List[SparseVector] = [{} for _ in range(self._cols)]
            for (r, c), v in self._entries.items():
                cols[c][r] = v
            self._col_cache = cols
        return self._col_cache

    def _rows_index(self) -> List[SparseVector]:
        if self._row_cache is None:
            rows: List[SparseVector] = [{} for _ in range(self._rows)]
            for (r, c), v in self._entries.items():
                rows[r][c] = v
            self._row_cache = rows
        return self._row_cache

    # === Algebra ===

    def transpose(self) -> 'SparseMatrix':
        return SparseMatrix(self._cols, self._rows, {(c, r): v for (r, c), v in self._entries.items()})

    @property
    def T(self) -> 'SparseMatrix':
        return self.transpose()

    def apply(self, vec: Mapping[int, object]) -> SparseVector:
        """Return self @ vec for a sparse column vector."""
        out: SparseVector = {}
        cols = self._columns()
        for c, v in vec.items():
            if v:
                vec_add(out, cols[c], v)
        return out

    def __matmul__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        columns = [self.apply(col) for col in other._columns()]
        return SparseMatrix.from_columns(self._rows, columns) if columns else SparseMatrix(self._rows, 0)

    def __add__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        entries = dict(self._entries)
        for k, v in other._entries.items():
            entries[k] = entries.get(k, 0) + v
        return SparseMatrix(self._rows, self._cols, entries)

    def __sub__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return self + other.scale(-1)

    def __neg__(self) -> 'SparseMatrix':
        return self.scale(-1)

    def scale(self, factor) -> 'SparseMatrix':
        factor = Fraction(factor)
        return SparseMatrix(self._rows, self._cols, {k: v * factor for k, v in self._entries.items()})

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self._rows, self._cols, frozenset(self._entries.items())))

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self._cols for _ in range(self._rows)]
        for (r, c), v in self._entries.items():
            dense[r][c] = v
        return dense

    def __getstate__(self):
        return (self._rows, self._cols, self._entries)

    def __setstate__(self, state):
        self._rows, self._cols, self._entries = state
        self._col_cache = None
        self._row_cache = None

    def __repr__(self) -> str:
        return f"SparseMatrix({self._rows}x{self._cols}, nnz={len(self._entries)})"


def block_diagonal(blocks: Iterable[SparseMatrix]) -> SparseMatrix:
    """Direct sum of matrices along the diagonal."""
    entries = {}
    r0 = c0 = 0
    for b in blocks:
        for (r, c), v in b.items():
            entries[(r0 + r, c0 + c)] = v
        r0 += b.rows
        c0 += b.cols
    return SparseMatrix(r0, c0, entries)


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Kronecker product; index (i, j) maps to i * b.rows + j."""
    entries = {}
    for (ra, ca), va in a.items():
        for (rb, cb), vb in b.items():
            entries[(ra * b.rows + rb, ca * b.cols + cb)] = va * vb
    return SparseMatrix(a.rows * b.rows, a.cols * b.cols, entries)
