# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging

from sfhlab.core.f2 import span_rank
from sfhlab.exceptions import InvariantError

from .decomposition import stable_decomposition

LOG = logging.getLogger(__name__)


class LimitClass:
    """Image of a vector of ``A_n`` in the colimit of a direct system."""

    def __init__(self, system, n, support):
        system.check_slope(n)
        width = len(system.term(n))
        for k in support:
            if not 0 <= k < width:
                raise IndexError(f"Position {k} outside A_{n} (dimension {width})")
        self.system = system
        self.n = n
        self.support = frozenset(support)

    def __repr__(self):
        term = self.system.term(self.n)
        labels = " + ".join(sorted(term.label(k) for k in self.support)) or "0"
        return f"LimitClass(n={self.n}, {labels})"

    def pushed(self, slope):
        """Support of the image at ``A_slope``."""
        return self.system.push(self.n, self.support, slope - self.n)

    def canonical(self, slope=None):
        slope = self.n + self.system.stabilisation_steps if slope is None else slope
        return slope, self.pushed(slope)

    def is_zero(self):
        return not self.canonical()[1]

    def __eq__(self, other):
        if not isinstance(other, LimitClass):
            return NotImplemented
        if not _same_system(self.system, other.system):
            return False
        slope = max(self.n, other.n) + self.system.stabilisation_steps
        return self.pushed(slope) == other.pushed(slope)

    def limit_gradings2(self):
        """Doubled limit gradings of the nonzero homogeneous parts of the class."""
        slope, support = self.canonical()
        return frozenset(self.system.limit_grading2(slope, k) for k in support)

    def __hash__(self):
        return hash((self.system.basis, self.system.orientation, self.limit_gradings2()))

    def __add__(self, other):
        if not _same_system(self.system, other.system):
            raise ValueError("Cannot add classes of different direct systems")
        slope = max(self.n, other.n)
        return class_at(self.system, slope, self.pushed(slope) ^ other.pushed(slope))

    @property
    def grading2(self):
        """Doubled colimit grading, ``None`` for zero or inhomogeneous classes."""
        if self.is_zero():
            return None
        return self.system.homogeneous_limit_grading2(self.n, self.support)

    def times_u(self, power=1):
        support = self.system.push(self.n, self.support, power, sign=self.system.u_sign)
        return class_at(self.system, self.n + power, support)

    def is_torsion(self):
        steps = self.system.stabilisation_steps
        first = self.times_u(steps).is_zero()
        if first != self.times_u(steps + 1).is_zero():
            raise InvariantError(f"U-torsion of {self!r} did not stabilise")
        return first


def _same_system(first, second):
    return first.basis == second.basis and first.orientation == second.orientation


def class_at(system, n, support):
    # U and sums may step past the last precomputed slope
    cls = LimitClass.__new__(LimitClass)
    cls.system = system
    cls.n = n
    cls.support = frozenset(support)
    return cls


def class_of(system, n, support):
    return LimitClass(system, n, support)


def iota_kernel(system, n):
    """Basis vectors of ``A_n`` that die in the colimit."""
    return [k for k in range(len(system.term(n))) if class_of(system, n, [k]).is_zero()]


def check_iota(system, n):
    """The kernel of ``A_n -> lim`` is the stable summand killed by the direct maps.

    In the ``-`` orientation that is ``S_-`` (spanned by ``d*``); the map is
    injective on ``S_+ + U``. The ``+`` orientation swaps the roles.
    """
    decomposition = stable_decomposition(system.term(n), system.basis)
    dying = decomposition.s_minus if system.orientation == "-" else decomposition.s_plus
    living = decomposition.s_plus if system.orientation == "-" else decomposition.s_minus

    for vector in dying:
        if not class_of(system, n, vector).is_zero():
            raise InvariantError(f"{vector} survives in the colimit of {system!r}")

    images = [class_of(system, n, v).canonical()[1] for v in living + decomposition.unstable]
    width = len(system.term(n + system.stabilisation_steps))
    if span_rank(images, width) != len(living) + len(decomposition.unstable):
        raise InvariantError(f"A_{n} -> lim is not injective on the surviving summands")
    return True
