#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab.core.reduction import reduce_to_eta_basis
from sfhlab.grids import cfk_hat
from sfhlab.grids import legendrian_numbers
from sfhlab.grids import load_grid
from sfhlab.grids import stabilise_grid
from sfhlab.grids.legendrian import writhe
from sfhlab.testing import CORPUS


def test_known_numbers():
    assert legendrian_numbers(load_grid("unknot")) == (-1, 0)
    assert legendrian_numbers(load_grid("right-trefoil")) == (1, 0)
    assert legendrian_numbers(load_grid("left-trefoil")) == (-6, 1)


def test_writhe():
    assert writhe(load_grid("right-trefoil")) == 3
    assert writhe(load_grid("left-trefoil")) == -3


@pytest.mark.parametrize("name", CORPUS)
def test_bounds(name):
    grid = load_grid(name)
    tau = reduce_to_eta_basis(cfk_hat(grid)).tau
    tb, r = legendrian_numbers(grid)
    assert tb + abs(r) <= 2 * tau - 1
    assert (tb + r) % 2 == 1


@pytest.mark.parametrize("name", ["unknot", "right-trefoil"])
def test_stabilisation_steps(name):
    grid = load_grid(name)
    tb, r = legendrian_numbers(grid)
    for column in range(grid.n):
        tb1, r1 = legendrian_numbers(stabilise_grid(grid, column))
        assert (tb1 - tb, r1 - r) in {(0, 0), (-1, 1), (-1, -1)}

if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
