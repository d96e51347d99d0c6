#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab.core.reduction import reduce_to_eta_basis
from sfhlab.exceptions import InvariantError
from sfhlab.grids import UModule
from sfhlab.grids import cfk_hat
from sfhlab.grids import hfk_minus
from sfhlab.grids import load_grid
from sfhlab.grids import stabilise_grid
from sfhlab.grids.minus import default_truncation
from sfhlab.testing import CORPUS


def test_unknot():
    module = hfk_minus(load_grid("unknot"))
    assert module.tower_tops2 == (0,)
    assert module.torsion == ()


def test_right_trefoil():
    module = hfk_minus(load_grid("right-trefoil"))
    assert module.tower_top2 == 2
    assert module.torsion == ((1, 0),)
    assert module.truncation >= 4


@pytest.mark.parametrize("name", CORPUS)
def test_tower_sits_at_tau(name):
    grid = load_grid(name)
    basis = reduce_to_eta_basis(cfk_hat(grid))
    module = hfk_minus(grid)
    assert module.tower_top2 == 2 * basis.tau
    assert sorted(order for order, _ in module.torsion) == sorted(basis.deltas)


@pytest.mark.parametrize("name,start", [("unknot", 2), ("right-trefoil", 4), ("left-trefoil", 4), ("figure-eight", 4)])
def test_truncation_starts_above_twice_the_genus(name, start):
    grid = load_grid(name)
    assert default_truncation(grid) == start
    assert hfk_minus(grid).truncation >= start
    assert hfk_minus(grid, truncation=start + 3).same_module(hfk_minus(grid))


@pytest.mark.parametrize(
    "name,column",
    [("unknot", 0), ("right-trefoil", 2), ("left-trefoil", 0), pytest.param("figure-eight", 1, marks=pytest.mark.long_test)],
)
def test_stabilisation_keeps_hfk_minus(name, column):
    grid = load_grid(name)
    bigger = hfk_minus(stabilise_grid(grid, column))
    assert bigger.same_module(hfk_minus(grid))
    assert bigger.tower_top2 == hfk_minus(grid).tower_top2


def test_umodule():
    module = UModule([2], [(1, 0), (2, 4)])
    assert module.dims(-2) == {-2: 1, 0: 2, 2: 2, 4: 1}
    assert module == UModule([2], [(2, 4), (1, 0)])
    assert module != UModule([0], [(1, 0), (2, 4)])

    with pytest.raises(InvariantError):
        UModule([0], [(0, 2)])

    with pytest.raises(InvariantError):
        UModule([0, 2], []).tower_top2


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
