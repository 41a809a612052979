"""
Elimination - Exact Linear Algebra

Rank computation over the rationals.

Large matrices are scaled to integer vectors and reduced fraction-free
(each update is p*v - a*w divided by the content of the result) with a
Markowitz-style pivot choice: shortest vector first, then the pivot column
with the fewest occurrences. Matrices under DENSE_THRESHOLD on both sides
use plain Fraction elimination.

A modular path (rank mod a large prime) is available. It is a lower bound
of the exact rank and is only ever returned when it meets a proven upper
bound (see certified_rank).
"""

import heapq
import logging
import random
from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from config import DENSE_THRESHOLD, MODULAR_PRIMES, SEED
from .sparse_matrix import SparseMatrix

logger = logging.getLogger(__name__)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _integer_vector(vec: Dict[int, Fraction]) -> Dict[int, int]:
    """Scale a rational vector to a primitive integer vector (same span)."""
    den = 1
    for v in vec.values():
        den = _lcm(den, Fraction(v).denominator)
    out = {k: int(Fraction(v) * den) for k, v in vec.items() if v}
    g = gcd(*out.values()) if out else 1
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


class _SparseReducer:
    """
    Sparse Gaussian elimination over a list of vectors.

    Subclasses define how a target vector is cleared at the pivot column.
    """

    def __init__(self, vectors: Sequence[Dict[int, int]]):
        self.vectors = {vid: dict(v) for vid, v in enumerate(vectors) if v}

    def _combine(self, target: Dict[int, int], pivot: Dict[int, int], col: int) -> Dict[int, int]:
        raise NotImplementedError

    def rank(self) -> int:
        vecs = self.vectors
        col_index: Dict[int, set] = defaultdict(set)
        for vid, v in vecs.items():
            for c in v:
                col_index[c].add(vid)
        heap = [(len(v), vid) for vid, v in vecs.items()]
        heapq.heapify(heap)

        rank = 0
        while heap:
            length, vid = heapq.heappop(heap)
            pivot = vecs.get(vid)
            if pivot is None or len(pivot) != length:
                continue  # stale heap entry
            col = min(pivot, key=lambda c: (len(col_index[c]), c))
            rank += 1
            del vecs[vid]
            for c in pivot:
                col_index[c].discard(vid)

            for other_id in list(col_index[col]):
                other = vecs[other_id]
                new = self._combine(other, pivot, col)
                for c in pivot:
                    if c in new:
                        col_index[c].add(other_id)
                    else:
                        col_index[c].discard(other_id)
                if new:
                    vecs[other_id] = new
                    heapq.heappush(heap, (len(new), other_id))
                else:
                    del vecs[other_id]
        return rank


class IntegerReducer(_SparseReducer):
    """Fraction-free elimination on primitive integer vectors."""

    def _combine(self, target, pivot, col):
        a = target[col]
        p = pivot[col]
        g = gcd(a, p)
        fa, fp = p // g, a // g
        new = {k: v * fa for k, v in target.items()}
        for k, v in pivot.items():
            nv = new.get(k, 0) - v * fp
            if nv:
                new[k] = nv
            else:
                new.pop(k, None)
        if new:
            content = gcd(*new.values())
            if content > 1:
                new = {k: v // content for k, v in new.items()}
        return new


class ModularReducer(_SparseReducer):
    """Elimination over GF(prime)."""

    def __init__(self, vectors: Sequence[Dict[int, int]], prime: int):
        self.prime = prime
        reduced = []
        for v in vectors:
            reduced.append({k: x % prime for k, x in v.items() if x % prime})
        super().__init__(reduced)

    def _combine(self, target, pivot, col):
        p = self.prime
        factor = target[col] * pow(pivot[col], -1, p) % p
        new = dict(target)
        for k, v in pivot.items():
            nv = (new.get(k, 0) - factor * v) % p
            if nv:
                new[k] = nv
            else:
                new.pop(k, None)
        return new


# === Block structure ===

def connected_blocks(m: SparseMatrix) -> List[Tuple[List[int], List[int]]]:
    """
    Split a matrix into the connected components of its row/column graph.

    Rows and columns are nodes, every stored entry is an edge. The matrix is
    block diagonal up to permutation along these components, so its rank is
    the sum of the block ranks.

    Returns:
        List of (row indices, column indices), each sorted; empty rows and
        columns are omitted
    """
    parent = list(range(m.rows + m.cols))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (r, c), _ in m.items():
        a, b = find(r), find(m.rows + c)
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: Dict[int, Tuple[List[int], List[int]]] = {}
    for (r, c), _ in m.items():
        root = find(r)
        rows, cols = groups.setdefault(root, ([], []))
        rows.append(r)
        cols.append(c)
    return [(sorted(set(rows)), sorted(set(cols))) for _, (rows, cols) in sorted(groups.items())]


def _vectors_by_block(m: SparseMatrix) -> List[List[Dict[int, Fraction]]]:
    """Vectors of the sparser orientation, grouped by connected block."""
    use_columns = m.cols >= m.rows
    vectors = m.column_vectors() if use_columns else m.row_vectors()
    blocks = connected_blocks(m)
    owner = {}
    for b, (rows, cols) in enumerate(blocks):
        for idx in (cols if use_columns else rows):
            owner[idx] = b
    grouped: List[List[Dict[int, Fraction]]] = [[] for _ in blocks]
    for idx, vec in enumerate(vectors):
        if vec:
            grouped[owner[idx]].append(vec)
    logger.debug(f"{m!r}: {len(blocks)} connected blocks")
    return grouped


# === Rank ===

def _dense_rank(m: SparseMatrix) -> int:
    """Plain Fraction elimination for small matrices."""
    rows = [row for row in m.to_dense() if any(row)]
    rank = 0
    ncols = m.cols
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f / pr[c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank(m: SparseMatrix) -> int:
    """
    Exact rank of m over the rationals.

    Args:
        m: Sparse matrix

    Returns:
        The rank, computed without rounding
    """
    if m.is_zero():
        return 0
    if m.rows < DENSE_THRESHOLD and m.cols < DENSE_THRESHOLD:
        return _dense_rank(m)
    total = 0
    for group in _vectors_by_block(m):
        total += IntegerReducer([_integer_vector(v) for v in group]).rank()
    return total


def choose_prime(seed: Optional[int] = None) -> int:
    """Pick one of the configured large primes, deterministically from seed."""
    rng = random.Random(SEED if seed is None else seed)
    return rng.choice(MODULAR_PRIMES)


def modular_rank(m: SparseMatrix, prime: Optional[int] = None, seed: Optional[int] = None) -> int:
    """
    Rank of the integer-scaled matrix modulo a large prime.

    Never larger than the exact rank: each vector is scaled to a primitive
    integer vector first, and reduction mod p can only lose rank.
    """
    if m.is_zero():
        return 0
    p = prime or choose_prime(seed)
    total = 0
    for group in _vectors_by_block(m):
        total += ModularReducer([_integer_vector(v) for v in group], p).rank()
    return total


def certified_rank(m: SparseMatrix, upper_bound: Optional[int] = None,
                   prime: Optional[int] = None) -> int:
    """
    Exact rank, taking the modular shortcut only when it is provably exact.

    modular_rank <= rank <= upper_bound, so when the modular rank reaches
    the bound it equals the exact rank. Otherwise the exact rank is computed.

    Args:
        m: Sparse matrix
        upper_bound: A proven upper bound of rank(m); min(rows, cols) is
            always used as well
        prime: Modulus for the shortcut (configured prime if omitted)

    Returns:
        The exact rank
    """
    bound = min(m.rows, m.cols)
    if upper_bound is not None:
        bound = min(bound, upper_bound)
    if bound == 0 or m.is_zero():
        return 0
    if m.rows < DENSE_THRESHOLD and m.cols < DENSE_THRESHOLD:
        return _dense_rank(m)
    fast = modular_rank(m, prime)
    if fast == bound:
        logger.debug(f"{m!r}: modular rank {fast} meets bound, exact")
        return fast
    logger.debug(f"{m!r}: modular rank {fast} below bound {bound}, running exact elimination")
    return rank(m)
