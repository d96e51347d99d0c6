# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""HFK-minus of a grid knot as a graded F[U]-module."""

import logging
from collections import Counter
from collections import defaultdict

from sfhlab.core.polynomials import deconvolve
from sfhlab.core.reduction import cancel
from sfhlab.core.reduction import reduce_to_eta_basis
from sfhlab.core.reduction import u_exponent_length
from sfhlab.exceptions import InvariantError

from .diagram import mirror_grid
from .hat import cfk_hat
from .hat import grid_data

LOG = logging.getLogger(__name__)

MAX_TRUNCATION = 32


class UModule:
    """Free towers plus torsion summands ``F[U]/U^order``, gradings doubled."""

    def __init__(self, tower_tops2, torsion, truncation=None):
        self.tower_tops2 = tuple(sorted((int(t) for t in tower_tops2), reverse=True))
        self.torsion = tuple(sorted(((int(o), int(t)) for o, t in torsion), key=lambda p: (-p[1], p[0])))
        self.truncation = truncation
        for order, _ in self.torsion:
            if order < 1:
                raise InvariantError(f"Torsion order must be positive, got {order}")

    @property
    def tower_count(self):
        return len(self.tower_tops2)

    @property
    def tower_top2(self):
        if self.tower_count != 1:
            raise InvariantError(f"Expected one tower, found {self.tower_count}")
        return self.tower_tops2[0]

    def same_module(self, other):
        return self.tower_tops2 == other.tower_tops2 and self.torsion == other.torsion

    def dims(self, low2):
        """Dimension of every grading ``>= low2`` (towers truncated at ``low2``)."""
        dims = Counter()
        for top2 in self.tower_tops2:
            for a2 in range(top2, low2 - 1, -2):
                dims[a2] += 1
        for order, top2 in self.torsion:
            for k in range(order):
                if top2 - 2 * k >= low2:
                    dims[top2 - 2 * k] += 1
        return dict(sorted(dims.items()))

    def __eq__(self, other):
        if not isinstance(other, UModule):
            return NotImplemented
        return self.same_module(other)

    def __hash__(self):
        return hash((self.tower_tops2, self.torsion))

    def __repr__(self):
        return f"{self.__class__.__name__}(towers={list(self.tower_tops2)}, torsion={list(self.torsion)})"


def _reduce(gradings2, entries, truncation, k):
    reduction = cancel(gradings2, entries, length=u_exponent_length, limit2=2 * truncation)

    towers = Counter(gradings2[i] // 2 for i in reduction.survivors)
    torsion = defaultdict(Counter)
    for bar in reduction.bars:
        if bar.length2:
            torsion[bar.length2 // 2][gradings2[bar.target] // 2] += 1

    try:
        tower_tops = deconvolve(towers, k)
        orders = {order: deconvolve(tops, k) for order, tops in sorted(torsion.items())}
    except InvariantError:
        # long torsion still looks free at this truncation
        return None
    return tower_tops, orders


def default_truncation(grid):
    return 2 * reduce_to_eta_basis(cfk_hat(grid)).genus + 2


def hfk_minus(grid, truncation=None):
    """Graded F[U]-module of ``grid``'s knot, computed over ``F[U]/U^N``.

    The complex is built on the mirror grid from rectangles avoiding O, each
    weighted by ``U^#X``. ``N`` defaults to ``2g + 2``, with the genus read off
    CFK-hat, and is certified by checking that ``N + 1`` gives the same answer.
    """
    mirror = mirror_grid(grid)
    states, gradings2, rectangles = grid_data(mirror)
    entries = [(r.target, r.source) for r in rectangles if r.o_count == 0]
    k = grid.n - 1

    n = truncation or default_truncation(grid)
    while True:
        if n > MAX_TRUNCATION:
            raise InvariantError(f"U-truncation did not stabilise below {MAX_TRUNCATION}")
        first = _reduce(gradings2, entries, n, k)
        second = _reduce(gradings2, entries, n + 1, k)
        if first is not None and first == second:
            break
        LOG.debug("Truncation U^%s not stable, trying U^%s", n, n + 1)
        n += 1

    tower_tops, orders = first
    for top, count in list(tower_tops.items()) + [(t, c) for tops in orders.values() for t, c in tops.items()]:
        if count < 0:
            raise InvariantError(f"Negative multiplicity {count} at grading {top}")

    result = UModule(
        [2 * top for top, count in tower_tops.items() for _ in range(count)],
        [(order, 2 * top) for order, tops in orders.items() for top, count in tops.items() for _ in range(count)],
        truncation=n,
    )
    LOG.info("HFK-minus of %r: %s (certified at U^%s)", grid, result, n)
    return result
