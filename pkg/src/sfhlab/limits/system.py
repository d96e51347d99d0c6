# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Direct systems of sutured modules indexed by ``n = -m``.

In the ``-`` orientation the direct maps are ``sigma_-`` and ``U`` acts by
``sigma_+``; the ``+`` orientation swaps them and reflects gradings about the
centre of each module first. Terms are built on demand from the closed forms.
"""

import logging

from lru import LRU

from sfhlab.core.f2 import F2Matrix
from sfhlab.exceptions import InsufficientDepthError
from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import SlopeOutOfRangeError
from sfhlab.surgery.module import sigma_matrix
from sfhlab.surgery.module import structure_module

LOG = logging.getLogger(__name__)

ORIENTATIONS = ("-", "+")

MODULE_CACHE_SIZE = 1024
SIGMA_CACHE_SIZE = 4096

_modules = LRU(MODULE_CACHE_SIZE)
_sigmas = LRU(SIGMA_CACHE_SIZE)


def _module(basis, m):
    key = (basis, m)
    if key not in _modules:
        _modules[key] = structure_module(basis, m)
    return _modules[key]


def _sigma(sign, basis, m):
    key = (sign, basis, m)
    if key not in _sigmas:
        _sigmas[key] = sigma_matrix(sign, basis, m, source=_module(basis, m), target=_module(basis, m - 1))
    return _sigmas[key]


def minimal_depth(basis):
    return 2 * basis.genus + 4


def _other(sign):
    return "+" if sign == "-" else "-"


class DirectSystem:
    def __init__(self, basis, depth, orientation="-"):
        if orientation not in ORIENTATIONS:
            raise ValueError(f"Orientation must be '-' or '+', got {orientation!r}")
        if depth < minimal_depth(basis):
            raise InsufficientDepthError(
                f"Depth {depth} is too small for genus {basis.genus}, need at least {minimal_depth(basis)}"
            )
        self.basis = basis
        self.depth = depth
        self.orientation = orientation
        self.direct_sign = orientation
        self.u_sign = _other(orientation)
        self.n0 = -2 * basis.tau + 1
        self.n_max = self.n0 + depth

    def __repr__(self):
        return f"DirectSystem({self.orientation}, n={self.n0}..{self.n_max}, {self.basis})"

    @property
    def stabilisation_steps(self):
        return 2 * self.basis.genus + 1

    def check_slope(self, n):
        if not self.n0 <= n <= self.n_max:
            raise SlopeOutOfRangeError(f"Slope n={n} outside {self.n0}..{self.n_max}")

    def slopes(self):
        return range(self.n0, self.n_max + 1)

    def term(self, n):
        return _module(self.basis, -n)

    def shifted_grading2(self, n, position):
        g2 = self.term(n).grading2(position)
        if self.orientation == "+":
            g2 = 4 - g2
        return g2 + 1 - n

    def limit_grading2(self, n, position):
        return self.shifted_grading2(n, position) - 2

    def homogeneous_limit_grading2(self, n, support):
        gradings = {self.limit_grading2(n, k) for k in support}
        if len(gradings) != 1:
            return None
        return gradings.pop()

    def direct_map(self, n):
        """``A_n -> A_{n+1}``."""
        return _sigma(self.direct_sign, self.basis, -n)

    def u_map(self, n):
        """``U: A_n -> A_{n+1}``, of degree -1 after the shift."""
        return _sigma(self.u_sign, self.basis, -n)

    def psi(self, start, end):
        """Composite of the direct maps from ``A_start`` to ``A_end``."""
        if end < start:
            raise ValueError(f"Cannot map A_{start} back to A_{end}")
        result = F2Matrix.identity(len(self.term(start)))
        for n in range(start, end):
            result = self.direct_map(n) @ result
        return result

    def push(self, n, support, steps, sign=None):
        """Apply ``steps`` maps (direct maps, or ``sign`` stabilisations) to a vector at ``A_n``."""
        vector = frozenset(support)
        for k in range(steps):
            matrix = self.direct_map(n + k) if sign is None else _sigma(sign, self.basis, -(n + k))
            vector = matrix.apply(vector)
        return vector

    def check(self):
        for n in range(self.n0, self.n_max):
            for matrix, expected in ((self.direct_map(n), 0), (self.u_map(n), -2)):
                for row, col in matrix.entries:
                    shift = self.shifted_grading2(n + 1, row) - self.shifted_grading2(n, col)
                    if shift != expected:
                        raise InvariantError(
                            f"Map A_{n} -> A_{n + 1} of {self!r} has degree {shift}/2, expected {expected}/2"
                        )
        LOG.debug("Checked %r", self)
        return True


def build_system(basis, depth=None, orientation="-"):
    depth = minimal_depth(basis) if depth is None else depth
    system = DirectSystem(basis, depth, orientation)
    system.check()
    return system


def reverse_orientation(system):
    return build_system(system.basis, system.depth, _other(system.orientation))


def sigma(sign, basis, m):
    """Cached stabilisation matrix from slope ``m`` to ``m - 1``."""
    return _sigma(sign, basis, m)


def module(basis, m):
    return _module(basis, m)
