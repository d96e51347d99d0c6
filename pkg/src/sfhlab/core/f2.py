# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Linear algebra over the two-element field.

Matrices are kept sparse (the frozenset of ``(row, col)`` positions holding a 1) and are
densified into ``numpy.uint8`` arrays for elimination.
"""

import logging
from collections import Counter

import numpy as np

from sfhlab.exceptions import InvariantError

LOG = logging.getLogger(__name__)


class F2Matrix:
    """A ``rows × cols`` matrix over F2 given by its nonzero positions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=()):
        # repeated positions add up mod 2
        counts = Counter((int(r), int(c)) for r, c in entries)
        for r, c in counts:
            if not (0 <= r < rows and 0 <= c < cols):
                raise InvariantError(f"Entry ({r}, {c}) outside a {rows}x{cols} matrix")
        entries = frozenset(rc for rc, k in counts.items() if k % 2)
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def __repr__(self):
        return f"F2Matrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def __eq__(self, other):
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        self._check_shape(other)
        return F2Matrix(self.rows, self.cols, self.entries ^ other.entries)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InvariantError(f"Cannot compose {self!r} with {other!r}")
        by_row = {}
        for r, c in other.entries:
            by_row.setdefault(r, []).append(c)
        result = set()
        for r, k in self.entries:
            for c in by_row.get(k, ()):
                result ^= {(r, c)}
        return F2Matrix(self.rows, other.cols, result)

    def _check_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InvariantError(f"Shape mismatch {self!r} / {other!r}")

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, ((i, i) for i in range(n)))

    @classmethod
    def from_dense(cls, array):
        array = np.asarray(array, dtype=np.uint8) % 2
        rows, cols = array.shape
        return cls(rows, cols, zip(*np.nonzero(array)))

    def dense(self):
        array = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, c in self.entries:
            array[r, c] = 1
        return array

    def transpose(self):
        return F2Matrix(self.cols, self.rows, ((c, r) for r, c in self.entries))

    def is_zero(self):
        return not self.entries

    def column(self, col):
        return frozenset(r for r, c in self.entries if c == col)

    def apply(self, support):
        """Image of the vector whose nonzero coordinates are ``support``."""
        support = set(support)
        image = set()
        for r, c in self.entries:
            if c in support:
                image ^= {r}
        return frozenset(image)

    def submatrix(self, rows, cols):
        rindex = {r: i for i, r in enumerate(rows)}
        cindex = {c: j for j, c in enumerate(cols)}
        return F2Matrix(
            len(rindex),
            len(cindex),
            ((rindex[r], cindex[c]) for r, c in self.entries if r in rindex and c in cindex),
        )

    def to_pairs(self):
        return [[r, c] for r, c in sorted(self.entries)]


def gf2_row_echelon(matrix):
    """Row-reduce a binary matrix. Returns ``(R, pivot_cols)``."""
    R = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    m, n = R.shape
    pivot_cols = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        candidates = np.nonzero(R[pivot_row:, col])[0]
        if len(candidates) == 0:
            continue
        found = pivot_row + candidates[0]
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        mask = R[:, col].astype(bool)
        mask[pivot_row] = False
        R[mask] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def dense_rank(matrix):
    matrix = np.asarray(matrix, dtype=np.uint8)
    if matrix.size == 0:
        return 0
    return len(gf2_row_echelon(matrix)[1])


def rank(m):
    if isinstance(m, F2Matrix):
        if m.is_zero():
            return 0
        return dense_rank(m.dense())
    return dense_rank(m)


def kernel_basis(matrix):
    """Basis of the null space of a dense matrix, as rows of a uint8 array."""
    matrix = np.asarray(matrix, dtype=np.uint8) % 2
    m, n = matrix.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    if m == 0:
        return np.eye(n, dtype=np.uint8)
    R, pivots = gf2_row_echelon(matrix)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(pivots):
            basis[k, p] = R[i, f]
    return basis


def solve(matrix, rhs):
    """One solution ``x`` of ``matrix @ x = rhs`` over F2, or ``None``."""
    matrix = np.asarray(matrix, dtype=np.uint8) % 2
    rhs = np.asarray(rhs, dtype=np.uint8).reshape(-1, 1) % 2
    m, n = matrix.shape
    R, pivots = gf2_row_echelon(np.hstack([matrix, rhs]))
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.uint8)
    for i, p in enumerate(pivots):
        x[p] = R[i, n]
    return x


def span_rank(vectors, width):
    """Rank of a family of vectors given as rows (or as supports)."""
    rows = []
    for v in vectors:
        if isinstance(v, (set, frozenset)):
            row = np.zeros(width, dtype=np.uint8)
            row[list(v)] = 1
            rows.append(row)
        else:
            rows.append(np.asarray(v, dtype=np.uint8))
    if not rows:
        return 0
    return dense_rank(np.vstack(rows))
