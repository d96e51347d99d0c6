# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Graded and bifiltered chain complexes over F2.

Gradings are Alexander gradings stored doubled (``grading2 = 2 * A``).
Differential matrices are indexed ``[target, source]``.
"""

import logging
from collections import defaultdict

import numpy as np

from sfhlab.exceptions import InvariantError

from .f2 import F2Matrix
from .f2 import gf2_row_echelon
from .f2 import kernel_basis
from .f2 import rank

LOG = logging.getLogger(__name__)


class Generator:
    __slots__ = ("label", "grading2")

    def __init__(self, label, grading2):
        self.label = label
        self.grading2 = int(grading2)

    def __repr__(self):
        return f"Generator({self.label!r}, {self.grading2})"

    def __eq__(self, other):
        return isinstance(other, Generator) and (self.label, self.grading2) == (other.label, other.grading2)

    def __hash__(self):
        return hash((self.label, self.grading2))


def _check_square(name, d, size):
    if (d.rows, d.cols) != (size, size):
        raise InvariantError(f"{name} must be {size}x{size}, got {d!r}")


def _by_grading(generators):
    groups = defaultdict(list)
    for i, g in enumerate(generators):
        groups[g.grading2].append(i)
    return dict(sorted(groups.items()))


class GradedComplex:
    """A complex whose differential shifts the doubled grading by ``degree2``.

    Knot and tile complexes use the default ``degree2 = 0``.
    """

    def __init__(self, generators, differential, degree2=0, check=True):
        self.generators = tuple(generators)
        self.differential = differential
        self.degree2 = int(degree2)
        _check_square("differential", differential, len(self.generators))
        if check:
            self.check()

    def __len__(self):
        return len(self.generators)

    def check(self):
        d = self.differential
        for r, c in d.entries:
            if self.generators[r].grading2 - self.generators[c].grading2 != self.degree2:
                raise InvariantError(
                    f"Differential {self.generators[c]} -> {self.generators[r]} does not have degree {self.degree2}/2"
                )
        if not (d @ d).is_zero():
            raise InvariantError("Differential does not square to zero")

    def levels(self):
        return _by_grading(self.generators)

    def level_maps(self, grading2):
        """Indices of one level, the differential out of it and the one into it."""
        levels = self.levels()
        idx = levels.get(grading2, [])
        out = self.differential.submatrix(levels.get(grading2 + self.degree2, []), idx)
        into = self.differential.submatrix(idx, levels.get(grading2 - self.degree2, []))
        return idx, out, into


class HomologyTable:
    """Per-grading dimensions with one cycle representative per class."""

    def __init__(self, dims, representatives):
        self.dims = dims
        self.representatives = representatives

    def total(self):
        return sum(self.dims.values())

    def __repr__(self):
        return f"HomologyTable({self.dims})"


def level_homology(indices, out, into):
    """Homology at one level: cycles of ``out`` modulo the image of ``into``.

    Returns the dimension and representatives (frozensets of global indices).
    """
    n = len(indices)
    if n == 0:
        return 0, []
    cycles = kernel_basis(out.dense())
    boundaries = into.dense().T  # rows = images of the previous level
    nb = boundaries.shape[0]
    reps = []
    if len(cycles):
        stacked = np.vstack([boundaries, cycles])
        _, pivots = gf2_row_echelon(stacked.T)
        # cycle columns that become pivots extend the boundary span
        for p in pivots:
            if p >= nb:
                reps.append(frozenset(indices[i] for i in np.nonzero(cycles[p - nb])[0]))
    dim = len(cycles) - rank(into)
    if len(reps) != dim:
        raise InvariantError(f"Homology bookkeeping mismatch ({len(reps)} != {dim})")
    return dim, reps


def homology(c):
    """Graded homology of a ``GradedComplex``."""
    c.check()
    dims = {}
    reps = {}
    for grading2 in c.levels():
        dim, r = level_homology(*c.level_maps(grading2))
        if dim:
            dims[grading2] = dim
            reps[grading2] = r
    return HomologyTable(dims, reps)


def homology_dims(c):
    """Per-grading dimension only (rank arithmetic, no representatives)."""
    dims = {}
    for grading2 in c.levels():
        idx, out, into = c.level_maps(grading2)
        dim = len(idx) - rank(out) - rank(into)
        if dim:
            dims[grading2] = dim
    return dims


class BifilteredComplex:
    """CFK-hat style complex: ``dK`` preserves the grading, ``dVert`` lowers it.

    ``tensor_factors`` counts extra two-dimensional factors (levels 0 and -1)
    that the complex carries on top of the knot complex; a grid of size n
    carries n - 1 of them.
    """

    def __init__(self, generators, dK, dVert, tensor_factors=0, check=True):
        self.generators = tuple(generators)
        if not self.generators:
            raise InvariantError("Empty complex")
        self.dK = dK
        self.dVert = dVert
        self.tensor_factors = tensor_factors
        _check_square("dK", dK, len(self.generators))
        _check_square("dVert", dVert, len(self.generators))
        if check:
            self.check()

    def __len__(self):
        return len(self.generators)

    @property
    def differential(self):
        return self.dK + self.dVert

    def check(self):
        g = self.generators
        for r, c in self.dK.entries:
            if g[r].grading2 != g[c].grading2:
                raise InvariantError(f"dK entry {g[c]} -> {g[r]} changes the grading")
        for r, c in self.dVert.entries:
            if g[r].grading2 >= g[c].grading2:
                raise InvariantError(f"dVert entry {g[c]} -> {g[r]} does not lower the grading")
        if not (self.dK @ self.dK).is_zero():
            raise InvariantError("dK does not square to zero")
        d = self.differential
        if not (d @ d).is_zero():
            raise InvariantError("Total differential does not square to zero")

    def associated_graded(self):
        return GradedComplex(self.generators, self.dK, check=False)

    def total_homology_dim(self):
        return len(self.generators) - 2 * rank(self.differential)

    def sublevel(self, grading2):
        """Indices of generators with ``grading2 <= s``."""
        return [i for i, g in enumerate(self.generators) if g.grading2 <= grading2]

    def conjugate(self, change):
        """Apply a filtered change of basis ``P`` (an F2Matrix): d -> P d P^-1."""
        P = change.dense().astype(np.int64)
        Pinv = _invert(change.dense())
        parts = []
        for d in (self.dK, self.dVert):
            parts.append((P @ d.dense().astype(np.int64) @ Pinv.astype(np.int64)) % 2)
        total = (parts[0] + parts[1]) % 2
        dK = np.zeros_like(total)
        dVert = np.zeros_like(total)
        for r, c in zip(*np.nonzero(total)):
            if self.generators[r].grading2 == self.generators[c].grading2:
                dK[r, c] = 1
            else:
                dVert[r, c] = 1
        return BifilteredComplex(
            self.generators,
            F2Matrix.from_dense(dK),
            F2Matrix.from_dense(dVert),
            tensor_factors=self.tensor_factors,
        )


def _invert(matrix):
    n = matrix.shape[0]
    R, pivots = gf2_row_echelon(np.hstack([matrix % 2, np.eye(n, dtype=np.uint8)]))
    if pivots[:n] != list(range(n)):
        raise InvariantError("Change of basis is not invertible")
    return R[:, n:]
