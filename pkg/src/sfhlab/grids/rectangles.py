# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Grid states, their gradings and empty rectangles on the torus.

A state ``x`` is a permutation: ``x[c]`` is the row of its point on the
vertical line ``c``. Points sit on lattice corners, markers in cell centres.
"""

import itertools
import logging
from collections import namedtuple

from tqdm import tqdm

from sfhlab.core.settings import SETTINGS

LOG = logging.getLogger(__name__)

Rectangle = namedtuple("Rectangle", ["source", "target", "x_count", "o_count"])


def grid_states(grid):
    return list(itertools.permutations(range(grid.n)))


def state_label(state):
    return "".join(str(r) for r in state)


def permutation_sign(state):
    inversions = sum(1 for i, j in itertools.combinations(range(len(state)), 2) if state[i] > state[j])
    return -1 if inversions % 2 else 1


def _ne(px, py, qx, qy):
    return (px < qx) == (py < qy)


def raw_grading2(grid, state):
    """Twice the Alexander grading of ``state`` up to a constant.

    Coordinates are doubled so that points and markers never share a line.
    """
    total = 0
    for c, r in enumerate(state):
        px, py = 2 * c, 2 * r
        for m in range(grid.n):
            mx = 2 * m + 1
            total += _ne(px, py, mx, 2 * grid.o_perm[m] + 1)
            total -= _ne(px, py, mx, 2 * grid.x_perm[m] + 1)
    return total


def _in_span(value, start, length, n):
    return (value - start) % n < length


def empty_rectangles(grid, states=None):
    """All empty rectangles ``x -> y`` with ``x`` at the lower-left and upper-right corners.

    Returns a list of ``Rectangle(source, target, x_count, o_count)`` indexed
    into ``states``.
    """
    n = grid.n
    if states is None:
        states = grid_states(grid)
    index = {s: i for i, s in enumerate(states)}
    result = []

    iterator = states
    if SETTINGS.get("progress-bars"):
        iterator = tqdm(states, desc="rectangles", leave=False)

    for x in iterator:
        source = index[x]
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                width = (b - a) % n
                height = (x[b] - x[a]) % n
                empty = True
                for k in range(1, width):
                    c = (a + k) % n
                    if 0 < (x[c] - x[a]) % n < height:
                        empty = False
                        break
                if not empty:
                    continue
                x_count = 0
                o_count = 0
                for k in range(width):
                    c = (a + k) % n
                    if _in_span(grid.x_perm[c], x[a], height, n):
                        x_count += 1
                    if _in_span(grid.o_perm[c], x[a], height, n):
                        o_count += 1
                y = list(x)
                y[a], y[b] = x[b], x[a]
                result.append(Rectangle(source, index[tuple(y)], x_count, o_count))

    LOG.debug("Grid %s: %s states, %s empty rectangles", grid.n, len(states), len(result))
    return result
