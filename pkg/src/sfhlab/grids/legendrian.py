# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Classical invariants of the Legendrian front carried by a grid."""

import logging
from collections import Counter

from sfhlab.exceptions import InvariantError

LOG = logging.getLogger(__name__)


def _horizontal(grid, row):
    """Columns ``(start, end)`` of the row segment, oriented from O to X."""
    return grid.o_column(row), grid.x_column(row)


def writhe(grid):
    total = 0
    for c in range(grid.n):
        v_low, v_high = sorted((grid.x_perm[c], grid.o_perm[c]))
        v = grid.vertical_direction(c)
        for row in range(v_low + 1, v_high):
            start, end = _horizontal(grid, row)
            if min(start, end) < c < max(start, end):
                h = 1 if end > start else -1
                total -= v * h
    return total


def corners(grid):
    """Count the NW and SE corners at X and at O markers.

    A NW corner has its segments going right and down, a SE corner left and up.
    """
    counts = Counter()
    for c in range(grid.n):
        for marker, row, other_row in (
            ("X", grid.x_perm[c], grid.o_perm[c]),
            ("O", grid.o_perm[c], grid.x_perm[c]),
        ):
            other_column = grid.o_column(row) if marker == "X" else grid.x_column(row)
            down = other_row < row
            right = other_column > c
            if down and right:
                counts["NW", marker] += 1
            elif not down and not right:
                counts["SE", marker] += 1
    return counts


def legendrian_numbers(grid):
    """``(tb, r)`` of the grid's Legendrian representative."""
    counts = corners(grid)
    nw = counts["NW", "X"] + counts["NW", "O"]
    tb = writhe(grid) - nw
    twice_r = counts["NW", "X"] + counts["SE", "O"] - counts["SE", "X"] - counts["NW", "O"]
    if twice_r % 2:
        raise InvariantError(f"Odd corner count for {grid!r}")
    LOG.debug("Legendrian numbers of %r: tb=%s r=%s", grid, tb, twice_r // 2)
    return tb, twice_r // 2
