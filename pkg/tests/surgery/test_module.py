#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab.core.f2 import F2Matrix
from sfhlab.core.reduction import ReducedBasis
from sfhlab.exceptions import InvariantError
from sfhlab.surgery import is_stable
from sfhlab.surgery import psi_infinity
from sfhlab.surgery import sigma_matrix
from sfhlab.surgery import structure_module
from sfhlab.surgery.module import check_homogeneous
from sfhlab.surgery.module import normalised
from sfhlab.surgery.module import sigma_degree2
from sfhlab.surgery.module import stabilisation_power

TREFOIL = ReducedBasis(1, [(0, -1)])
FIGURE_EIGHT = ReducedBasis(0, [(1, 0), (0, -1)])
GENUS_TWO = ReducedBasis(-1, [(2, 1), (0, -2)])

BASES = [ReducedBasis(0, []), TREFOIL, ReducedBasis(-1, [(1, 0)]), FIGURE_EIGHT, GENUS_TWO]


def test_trefoil_module():
    mod = structure_module(TREFOIL, -5)
    assert len(mod) == 9
    assert mod.unstable_count == 7
    assert mod.dims() == {-4: 1, -2: 2, 0: 1, 2: 1, 4: 1, 6: 2, 8: 1}
    assert mod.grading2(mod.d(1, 1)) == 6
    assert mod.grading2(mod.d_star(1, 1)) == -2
    assert [g for _, g in mod.unstable] == [8, 6, 4, 2, 0, -2, -4]
    assert mod.find("d", 1, 2) is None
    assert mod.labels()[0] == "d[1,1]"


@pytest.mark.parametrize("basis", BASES)
@pytest.mark.parametrize("m", [-9, -4, 0, 3, 7])
def test_module_symmetry(basis, m):
    mod = structure_module(basis, m)
    dims = mod.dims()
    for a2, dim in dims.items():
        assert dims.get(4 - a2) == dim
    assert len(mod) == 2 * sum(basis.deltas) + abs(2 * basis.tau - m)


def test_genus_two_module():
    mod = structure_module(GENUS_TWO, -8)
    assert len(mod.positions("d")) == 3
    assert len(mod.positions("d*")) == 3
    assert mod.unstable_count == 6
    assert mod.homogeneous_grading2([mod.d(2, 1), mod.d(2, 2)]) is None
    assert mod.homogeneous_grading2([mod.d(1, 1)]) == mod.grading2(mod.d(1, 1))


@pytest.mark.parametrize("basis", BASES)
@pytest.mark.parametrize("m", [-7, -2, 1, 5])
@pytest.mark.parametrize("sign", ["-", "+"])
def test_sigma_degree(basis, m, sign):
    source, target = structure_module(basis, m), structure_module(basis, m - 1)
    check_homogeneous(sigma_matrix(sign, basis, m), source, target, sigma_degree2(sign))


@pytest.mark.parametrize("basis", BASES)
@pytest.mark.parametrize("m", [-7, -2, 1, 5])
def test_sigmas_commute(basis, m):
    first = sigma_matrix("-", basis, m - 1) @ sigma_matrix("+", basis, m)
    second = sigma_matrix("+", basis, m - 1) @ sigma_matrix("-", basis, m)
    assert first == second


def test_wrong_degree_detected():
    source, target = structure_module(TREFOIL, -5), structure_module(TREFOIL, -6)
    with pytest.raises(InvariantError):
        check_homogeneous(sigma_matrix("+", TREFOIL, -5), source, target, sigma_degree2("-"))


def test_bad_sign():
    with pytest.raises(ValueError):
        sigma_matrix("x", TREFOIL, -5)


def test_stable_and_unstable():
    mod = structure_module(TREFOIL, -5)
    assert is_stable([mod.d(1, 1)], TREFOIL, -5)
    assert is_stable([mod.d_star(1, 1)], TREFOIL, -5)
    for ell in range(1, mod.unstable_count + 1):
        assert not is_stable([mod.u(ell)], TREFOIL, -5)
    assert psi_infinity([], TREFOIL, -5) == frozenset()


def test_psi_infinity_certifies_the_representative():
    mod = structure_module(TREFOIL, -5)
    image = psi_infinity([mod.u(1), mod.u(2)], TREFOIL, -5)
    far = structure_module(TREFOIL, -5 - 2 * 3)
    assert normalised(image, far) == normalised([mod.u(1), mod.u(2)], mod)

    # one step is not enough for d[1,1] to die
    with pytest.raises(InvariantError):
        psi_infinity([mod.d(1, 1)], TREFOIL, -5, power=0)
    assert psi_infinity([mod.u(1)], TREFOIL, -5, power=0) == frozenset([mod.u(1)])


def test_stabilisation_power():
    power = stabilisation_power("-", TREFOIL, -5, 3)
    assert power.cols == 9
    assert power.rows == len(structure_module(TREFOIL, -8))
    assert stabilisation_power("+", TREFOIL, -5, 0) == F2Matrix.identity(9)


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
