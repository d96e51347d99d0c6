#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab.core.reduction import ReducedBasis
from sfhlab.exceptions import SlopeOutOfRangeError
from sfhlab.limits import decompose
from sfhlab.limits import stable_decomposition
from sfhlab.limits.system import module

TREFOIL = ReducedBasis(1, [(0, -1)])
GENUS_TWO = ReducedBasis(-1, [(2, 1), (0, -2)])


def test_trefoil():
    mod = module(TREFOIL, -5)
    decomposition = stable_decomposition(mod, TREFOIL)
    assert decomposition.power == 3
    assert decomposition.s_plus == [frozenset([mod.d(1, 1)])]
    assert decomposition.s_minus == [frozenset([mod.d_star(1, 1)])]
    assert len(decomposition.unstable) == 7
    assert decompose(TREFOIL, -5) == decomposition


def test_unknot():
    unknot = ReducedBasis(0, [])
    decomposition = decompose(unknot, -3)
    assert decomposition.s_plus == []
    assert decomposition.s_minus == []
    assert len(decomposition.unstable) == 3


@pytest.mark.parametrize("m", [-2, -5, -9])
def test_genus_two(m):
    mod = module(GENUS_TWO, m)
    decomposition = stable_decomposition(mod, GENUS_TWO)
    assert decomposition.power == 5
    assert len(decomposition.s_plus) == 3
    assert len(decomposition.s_minus) == 3
    assert len(decomposition.unstable) == mod.unstable_count
    assert set().union(*decomposition.s_plus) == set(mod.positions("d"))
    assert set().union(*decomposition.s_minus) == set(mod.positions("d*"))


def test_slope_too_large():
    with pytest.raises(SlopeOutOfRangeError):
        decompose(TREFOIL, 3)
    # the boundary slope has no unstable part
    assert decompose(TREFOIL, 2).unstable == []


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
