#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab.core.reduction import ReducedBasis
from sfhlab.exceptions import NonHomogeneousClassError
from sfhlab.legendrian import LegendrianRep
from sfhlab.legendrian import classify
from sfhlab.legendrian import fibred_tightness
from sfhlab.legendrian import psi_infinity_vanishes
from sfhlab.legendrian import stabilize_class
from sfhlab.legendrian import transverse_class
from sfhlab.legendrian import transverse_pushoff_invariance
from sfhlab.legendrian.classify import NECESSARILY_OVERTWISTED
from sfhlab.legendrian.classify import NOT_FIBRED
from sfhlab.legendrian.classify import OVERTWISTED
from sfhlab.legendrian.classify import TIGHT
from sfhlab.legendrian.classify import TIGHT_COMPATIBLE
from sfhlab.limits import build_system
from sfhlab.limits import class_of
from sfhlab.surgery import structure_module

UNKNOT = ReducedBasis(0, [])
TREFOIL = ReducedBasis(1, [(0, -1)])


@pytest.fixture
def system():
    return build_system(TREFOIL, orientation="-")


def test_tight_compatible(system):
    rep = LegendrianRep(TREFOIL, -5, 0)
    cls = class_of(system, 5, [system.term(5).u(3)])
    assert classify(rep, cls) == TIGHT_COMPATIBLE


def test_torsion_is_overtwisted(system):
    rep = LegendrianRep(TREFOIL, -5, 0)
    cls = class_of(system, 5, [system.term(5).d(1, 1)])
    assert classify(rep, cls) == NECESSARILY_OVERTWISTED


def test_outside_the_unstable_range(system):
    rep = LegendrianRep(TREFOIL, -1, -3)
    cls = class_of(system, 1, [system.term(1).u(1)])
    assert classify(rep, cls) == NECESSARILY_OVERTWISTED


def test_non_homogeneous(system):
    term = system.term(5)
    cls = class_of(system, 5, [term.u(1), term.d(1, 1)])
    with pytest.raises(NonHomogeneousClassError):
        classify(LegendrianRep(TREFOIL, -5, 0), cls)


def test_psi_infinity():
    rep = LegendrianRep(TREFOIL, 1, 0)
    mod = structure_module(TREFOIL, 1)
    assert psi_infinity_vanishes(rep, [mod.d(1, 1)])
    assert not psi_infinity_vanishes(rep, [mod.u(1)])


def test_stabilize_class(system):
    cls = class_of(system, 3, [system.term(3).u(1)])
    assert stabilize_class(cls, "-") == cls
    plus = stabilize_class(cls, "+")
    assert plus == cls.times_u()
    assert plus.grading2 == cls.grading2 - 2


def test_transverse_pushoff(system):
    rep = LegendrianRep(TREFOIL, -3, 0)
    cls = class_of(system, 3, [system.term(3).u(1)])
    assert transverse_class(rep, cls) is cls
    assert transverse_pushoff_invariance(rep, cls)


@pytest.mark.parametrize(
    "basis,expected",
    [
        (UNKNOT, TIGHT),
        (TREFOIL, TIGHT),
        (ReducedBasis(-1, [(1, 0)]), OVERTWISTED),
        (ReducedBasis(0, [(1, 0), (0, -1)]), OVERTWISTED),
        (ReducedBasis(0, [(1, 0), (1, -1)]), NOT_FIBRED),
    ],
)
def test_fibred_tightness(basis, expected):
    assert fibred_tightness(basis) == expected


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
