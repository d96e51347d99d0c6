#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab.core.reduction import ReducedBasis
from sfhlab.exceptions import SlopeOutOfRangeError
from sfhlab.limits import LimitClass
from sfhlab.limits import build_system
from sfhlab.limits import check_iota
from sfhlab.limits import class_of
from sfhlab.limits import iota_kernel

TREFOIL = ReducedBasis(1, [(0, -1)])
BASES = [
    ReducedBasis(0, []),
    TREFOIL,
    ReducedBasis(-1, [(1, 0)]),
    ReducedBasis(0, [(1, 0), (0, -1)]),
    ReducedBasis(-1, [(2, 1), (0, -2)]),
]


@pytest.fixture
def minus():
    return build_system(TREFOIL, orientation="-")


def test_tower_and_torsion(minus):
    term = minus.term(5)
    tower = class_of(minus, 5, [term.u(1)])
    torsion = class_of(minus, 5, [term.d(1, 1)])

    assert not tower.is_zero()
    assert not tower.is_torsion()
    assert tower.grading2 == 2

    assert not torsion.is_zero()
    assert torsion.is_torsion()
    assert torsion.grading2 == 0

    assert class_of(minus, 5, [term.d_star(1, 1)]).is_zero()
    assert class_of(minus, 5, [term.d_star(1, 1)]).grading2 is None
    assert class_of(minus, 5, [term.u(1), term.d(1, 1)]).grading2 is None


def test_equality_across_slopes(minus):
    first = class_of(minus, 2, [minus.term(2).u(1)])
    second = class_of(minus, 4, [minus.term(4).u(1)])
    assert first == second
    assert hash(first) == hash(second)
    assert first != class_of(minus, 4, [minus.term(4).u(2)])
    assert (first + second).is_zero()


def test_hash_tells_classes_apart(minus):
    term = minus.term(5)
    tower = class_of(minus, 5, [term.u(1)])
    torsion = class_of(minus, 5, [term.d(1, 1)])
    zero = class_of(minus, 5, [term.d_star(1, 1)])

    assert tower.limit_gradings2() == {2}
    assert torsion.limit_gradings2() == {0}
    assert zero.limit_gradings2() == frozenset()
    assert len({hash(tower), hash(torsion), hash(zero)}) == 3
    assert len({tower, torsion, zero, class_of(minus, 3, [minus.term(3).u(1)])}) == 3


def test_times_u(minus):
    cls = class_of(minus, 3, [minus.term(3).u(1)])
    assert cls.times_u() == class_of(minus, 4, [minus.term(4).u(2)])
    assert cls.times_u(2).grading2 == cls.grading2 - 4
    assert cls.times_u().n == 4


def test_orientations_are_not_mixed(minus):
    plus = build_system(TREFOIL, orientation="+")
    cls = class_of(minus, 3, [minus.term(3).u(1)])
    assert cls != class_of(plus, 3, [plus.term(3).u(1)])
    with pytest.raises(ValueError):
        cls + class_of(plus, 3, [plus.term(3).u(1)])


def test_bad_classes(minus):
    with pytest.raises(SlopeOutOfRangeError):
        LimitClass(minus, minus.n_max + 1, [])
    with pytest.raises(IndexError):
        LimitClass(minus, 2, [len(minus.term(2))])


def test_iota_kernel(minus):
    assert iota_kernel(minus, 5) == [minus.term(5).d_star(1, 1)]
    plus = build_system(TREFOIL, orientation="+")
    assert iota_kernel(plus, 5) == [plus.term(5).d(1, 1)]


@pytest.mark.parametrize("basis", BASES)
@pytest.mark.parametrize("orientation", ["-", "+"])
def test_check_iota(basis, orientation):
    system = build_system(basis, orientation=orientation)
    for n in system.slopes():
        assert check_iota(system, n)


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
