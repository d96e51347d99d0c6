# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Colimit of a direct system as a graded F[U]-module.

The colimit in a grading ``a`` is represented at the deepest slope ``N``.
A class vanishes in the colimit when ``D`` further direct maps kill it, so
``rank(U^k)`` on the colimit is the rank of ``direct^D U^k`` on ``(A_N)_a``.
Summands are then counted from the ranks:

    c_{>=k}(a) = rank(U^{k-1} on a) - rank(U^k on a + 1)

is the number of summands with top ``a`` and length at least ``k``.
Summands that reach the floor ``-g - 2`` are towers.
"""

import logging

from sfhlab.core.f2 import F2Matrix
from sfhlab.core.f2 import rank
from sfhlab.exceptions import InsufficientDepthError
from sfhlab.exceptions import InvariantError
from sfhlab.grids.minus import UModule

from .system import sigma

LOG = logging.getLogger(__name__)


class LimitModule(UModule):
    def __init__(self, tower_tops2, torsion, orientation="-", slope=None, steps=None):
        super().__init__(tower_tops2, torsion)
        self.orientation = orientation
        self.slope = slope
        self.steps = steps

    @property
    def tau(self):
        return self.tower_top2 // 2

    def torsion_pairs(self):
        """Torsion as ``(top, order)`` in undoubled gradings."""
        return [(top2 // 2, order) for order, top2 in self.torsion]


def floor2(basis):
    return 2 * (-basis.genus - 2)


class _RankOracle:
    def __init__(self, system, slope, steps):
        self.system = system
        self.slope = slope
        self.steps = steps
        self.term = system.term(slope)
        self.cache = {}

    def _composite(self, k):
        if k not in self.cache:
            basis = self.system.basis
            result = F2Matrix.identity(len(self.term))
            n = self.slope
            for _ in range(k):
                result = sigma(self.system.u_sign, basis, -n) @ result
                n += 1
            for _ in range(self.steps):
                result = sigma(self.system.direct_sign, basis, -n) @ result
                n += 1
            self.cache[k] = result
        return self.cache[k]

    def columns(self, a2):
        return [p for p in range(len(self.term)) if self.system.limit_grading2(self.slope, p) == a2]

    def rank(self, k, a2):
        cols = self.columns(a2)
        if not cols:
            return 0
        composite = self._composite(k)
        return rank(composite.submatrix(range(composite.rows), cols))


def _summands(system, slope, steps):
    basis = system.basis
    oracle = _RankOracle(system, slope, steps)
    low2 = floor2(basis)
    gradings = sorted(
        {a2 for p in range(len(oracle.term)) if (a2 := system.limit_grading2(slope, p)) >= low2},
        reverse=True,
    )

    towers = []
    torsion = []
    for a2 in gradings:
        reach = (a2 - low2) // 2 + 1
        at_least = [None]
        for k in range(1, reach + 1):
            at_least.append(oracle.rank(k - 1, a2) - oracle.rank(k, a2 + 2))
        at_least.append(0)
        for k in range(1, reach):
            count = at_least[k] - at_least[k + 1]
            if count < 0:
                raise InvariantError(f"Negative summand count at {a2}/2 and length {k}")
            torsion.extend([(k, a2)] * count)
        towers.extend([a2] * at_least[reach])
    return towers, torsion


def colimit(system, slope=None, steps=None):
    """Graded F[U]-module ``lim A_n``, certified at ``slope + 1`` and ``steps + 1``."""
    slope = system.n_max if slope is None else slope
    steps = system.stabilisation_steps if steps is None else steps

    towers, torsion = _summands(system, slope, steps)
    if (towers, torsion) != _summands(system, slope, steps + 1):
        raise InsufficientDepthError(f"Kernels of the direct maps did not stabilise after {steps} steps")
    if (towers, torsion) != _summands(system, slope + 1, steps):
        raise InsufficientDepthError(f"Colimit is not yet represented at slope {slope}")

    if len(towers) != 1:
        raise InvariantError(f"Colimit of {system!r} has {len(towers)} towers")

    result = LimitModule(towers, torsion, orientation=system.orientation, slope=slope, steps=steps)
    LOG.info("Colimit of %r: %s", system, result)
    return result
