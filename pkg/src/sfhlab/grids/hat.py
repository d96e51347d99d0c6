# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging

from lru import LRU

from sfhlab.core.complexes import BifilteredComplex
from sfhlab.core.complexes import Generator
from sfhlab.core.f2 import F2Matrix
from sfhlab.core.polynomials import deconvolve
from sfhlab.exceptions import InvariantError

from .alexander import halve_levels
from .alexander import raw_euler_characteristic
from .rectangles import empty_rectangles
from .rectangles import grid_states
from .rectangles import raw_grading2
from .rectangles import state_label

LOG = logging.getLogger(__name__)

GRID_CACHE_SIZE = 16

_grid_data = LRU(GRID_CACHE_SIZE)


def grid_data(grid):
    """States, centred doubled Alexander gradings and empty rectangles of ``grid``.

    The constant in the grading is fixed by making the Alexander polynomial,
    read off the Euler characteristic, symmetric about zero.
    """
    if grid not in _grid_data:
        _grid_data[grid] = _compute_grid_data(grid)
    return _grid_data[grid]


def _compute_grid_data(grid):
    states = grid_states(grid)
    raw = [raw_grading2(grid, s) for s in states]

    counts, parity = halve_levels(raw_euler_characteristic(grid, states))
    alexander = deconvolve(counts, grid.n - 1, sign=-1)
    low, high = min(alexander), max(alexander)
    if (low + high) % 2:
        raise InvariantError(f"Alexander polynomial of {grid!r} has no centre")
    shift2 = -(low + high)

    gradings2 = tuple(r - parity + shift2 for r in raw)
    rectangles = tuple(empty_rectangles(grid, states))
    for rect in rectangles:
        drop2 = gradings2[rect.source] - gradings2[rect.target]
        if drop2 != 2 * (rect.o_count - rect.x_count):
            raise InvariantError(f"Rectangle {rect} does not match the grading")
    return tuple(states), gradings2, rectangles


def cfk_hat(grid):
    """Filtered grid complex: rectangles avoiding X, split by whether they contain O.

    The complex carries ``n - 1`` extra two-dimensional tensor factors.
    """
    states, gradings2, rectangles = grid_data(grid)
    n = len(states)
    dK, dVert = [], []
    for rect in rectangles:
        if rect.x_count:
            continue
        (dVert if rect.o_count else dK).append((rect.target, rect.source))

    generators = [Generator(state_label(s), a2) for s, a2 in zip(states, gradings2)]
    LOG.info("CFK-hat of %r: %s generators, %s + %s entries", grid, n, len(dK), len(dVert))
    return BifilteredComplex(
        generators,
        F2Matrix(n, n, dK),
        F2Matrix(n, n, dVert),
        tensor_factors=grid.n - 1,
    )
