# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging
from collections import Counter

import sympy

from sfhlab.core.polynomials import T
from sfhlab.core.polynomials import deconvolve
from sfhlab.core.polynomials import from_expr
from sfhlab.core.polynomials import normalise
from sfhlab.exceptions import InvariantError

from .rectangles import grid_states
from .rectangles import permutation_sign
from .rectangles import raw_grading2

LOG = logging.getLogger(__name__)


def winding_numbers(grid):
    """``a[i][j]``: winding number of the knot around the lattice point ``(i, j)``."""
    n = grid.n
    a = [[0] * n for _ in range(n)]
    for c in range(n):
        low, high = sorted((grid.x_perm[c], grid.o_perm[c]))
        v = grid.vertical_direction(c)
        for i in range(c + 1):
            for j in range(low + 1, high + 1):
                a[i][j] += v
    return a


def alexander_polynomial(grid):
    """Alexander polynomial from the winding-number determinant, normalised up to ``±t^k``."""
    n = grid.n
    a = winding_numbers(grid)
    matrix = sympy.Matrix(n, n, lambda i, j: T ** (-a[i][j]))
    expr = sympy.cancel(matrix.det() / (1 - T) ** (n - 1))
    return normalise(from_expr(expr))


def raw_euler_characteristic(grid, states=None):
    """``{raw_grading2: #even - #odd}`` over all grid states."""
    if states is None:
        states = grid_states(grid)
    chi = Counter()
    for s in states:
        chi[raw_grading2(grid, s)] += permutation_sign(s)
    return chi


def halve_levels(chi2):
    """Turn ``{grading2: c}`` into ``{grading: c}`` after moving to even gradings.

    Returns ``(counts, parity)`` where ``parity`` was subtracted from every level.
    """
    parities = {g % 2 for g in chi2}
    if len(parities) > 1:
        raise InvariantError("Grading levels do not share a parity")
    parity = parities.pop() if parities else 0
    return {(g - parity) // 2: c for g, c in chi2.items() if c}, parity


def grid_euler_characteristic(grid, states=None):
    """Graded Euler characteristic of the grid states with ``(1 - t^-1)^(n-1)`` removed."""
    counts, _ = halve_levels(raw_euler_characteristic(grid, states))
    result = deconvolve(counts, grid.n - 1, sign=-1)
    LOG.debug("Euler characteristic of %r: %s", grid, result)
    return normalise(result)
