#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from sfhlab.core.complexes import BifilteredComplex
from sfhlab.core.complexes import Generator
from sfhlab.core.f2 import F2Matrix
from sfhlab.core.reduction import ReducedBasis
from sfhlab.core.reduction import cancel
from sfhlab.core.reduction import reduce_to_eta_basis
from sfhlab.core.reduction import tau_from_filtration
from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import NotAKnotError


def trefoil_complex():
    """Right-handed trefoil: x1 survives, x0 -> x-1 is a vertical arrow."""
    generators = [Generator("x1", 2), Generator("x0", 0), Generator("x-1", -2)]
    return BifilteredComplex(generators, F2Matrix.zero(3, 3), F2Matrix(3, 3, [(2, 1)]))


def figure_eight_complex():
    """Box complex a -> b, a -> c, b -> d, c -> d plus a survivor e at 0."""
    generators = [
        Generator("a", 2),
        Generator("b", 0),
        Generator("c", 0),
        Generator("d", -2),
        Generator("e", 0),
    ]
    dVert = F2Matrix(5, 5, [(1, 0), (2, 0), (3, 1), (3, 2)])
    return BifilteredComplex(generators, F2Matrix.zero(5, 5), dVert)


def test_trefoil():
    basis = reduce_to_eta_basis(trefoil_complex())
    assert basis == ReducedBasis(1, [(0, -1)])
    assert basis.genus == 1
    assert basis.deltas == [1]
    assert basis.hfk_hat_dims() == {-1: 1, 0: 1, 1: 1}
    assert tau_from_filtration(trefoil_complex()) == 1


def test_figure_eight():
    basis = reduce_to_eta_basis(figure_eight_complex())
    assert basis.tau == 0
    assert basis.pairs == ((1, 0), (0, -1))
    assert basis.top_dimension() == 1
    assert tau_from_filtration(figure_eight_complex()) == 0


def genus_two_complex():
    """Genus two, tau = -1: eta_0 at -1 with vertical arrows 2 -> 1 and 0 -> -2."""
    generators = [
        Generator("x2", 4),
        Generator("x1", 2),
        Generator("e0", -2),
        Generator("y0", 0),
        Generator("y-2", -4),
    ]
    dVert = F2Matrix(5, 5, [(1, 0), (4, 3)])
    return BifilteredComplex(generators, F2Matrix.zero(5, 5), dVert)


def test_genus_two_tau_minus_one():
    c = genus_two_complex()
    basis = reduce_to_eta_basis(c)
    assert basis == ReducedBasis(-1, [(2, 1), (0, -2)])
    assert basis.genus == 2
    assert basis.deltas == [1, 2]
    assert tau_from_filtration(c) == -1


def test_cancel_prefers_short_arrows():
    # 0 -> 1 (length 1) and 0 -> 2 (length 2), 3 -> 2 (length 0)
    gradings2 = [2, 0, -2, -2]
    reduction = cancel(gradings2, [(1, 0), (2, 0), (2, 3)])
    assert [bar.length2 for bar in reduction.bars] == [0, 2]
    assert reduction.survivors == ()


def test_not_a_knot():
    generators = [Generator("a", 0), Generator("b", 0)]
    c = BifilteredComplex(generators, F2Matrix.zero(2, 2), F2Matrix.zero(2, 2))
    with pytest.raises(NotAKnotError):
        reduce_to_eta_basis(c)
    with pytest.raises(NotAKnotError):
        tau_from_filtration(c)


def test_reduced_basis_validation():
    with pytest.raises(InvariantError):
        ReducedBasis(0, [(0, 0)])
    with pytest.raises(InvariantError):
        ReducedBasis(0, [(2, 1)], genus=1)


def filtered_changes(c):
    """Unitriangular changes of basis that never raise the grading."""
    n = len(c)
    gradings = [g.grading2 for g in c.generators]
    candidates = [(r, s) for r in range(n) for s in range(n) if gradings[r] < gradings[s]]
    return st.lists(st.sampled_from(candidates), max_size=6).map(
        lambda entries: F2Matrix.identity(n) + F2Matrix(n, n, set(entries))
    )


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_reduction_is_invariant_under_filtered_changes(data):
    for c in (trefoil_complex(), figure_eight_complex()):
        change = data.draw(filtered_changes(c))
        conjugated = c.conjugate(change)
        assert reduce_to_eta_basis(conjugated) == reduce_to_eta_basis(c)
        assert tau_from_filtration(conjugated) == tau_from_filtration(c)


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
