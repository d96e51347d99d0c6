# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Recovering EH from its two limit classes.

A vector at slope ``tb`` has an image in the ``-`` colimit (which forgets
its ``S_-`` part) and one in the ``+`` colimit (which forgets ``S_+``); the
latter stands for the class of the reversed knot. Together the two images
pin the vector down when ``tb <= 2 tau``.
"""

import logging

import numpy as np

from sfhlab.core.f2 import solve
from sfhlab.exceptions import InconsistentPairError
from sfhlab.exceptions import KnotMismatchError
from sfhlab.limits.classes import class_at
from sfhlab.limits.system import module

LOG = logging.getLogger(__name__)

UNDETERMINED = "undetermined"

EQUIVALENT = "equivalent"
DISTINCT = "distinct"
UNDECIDED = "undecided"


def _check_system(cls, rep, orientation):
    if cls.system.basis != rep.basis:
        raise KnotMismatchError(f"{cls!r} belongs to another knot than {rep!r}")
    if cls.system.orientation != orientation:
        raise ValueError(f"Expected a class of the '{orientation}' system, got {cls.system!r}")


def project_pair(rep, support, minus_system, plus_system):
    """Classes of a vector of the module at slope ``tb`` in both colimits."""
    n = -rep.tb
    classes = []
    for system in (minus_system, plus_system):
        start = max(n, system.n0)
        classes.append(class_at(system, start, system.push(n, support, start - n)))
    return tuple(classes)


def _block(cls, n):
    system = cls.system
    slope = max(n, cls.n) + system.stabilisation_steps
    matrix = system.psi(n, slope).dense()
    rhs = np.zeros(matrix.shape[0], dtype=np.uint8)
    rhs[sorted(cls.pushed(slope))] = 1
    return matrix, rhs


def reconstruct_eh(pair_minus, pair_plus, rep, assume_tight=False):
    """The vector at slope ``tb`` with the given images, or ``UNDETERMINED`` if ``tb > 2 tau``.

    With ``assume_tight`` the vector must have an unstable component.
    """
    if rep.tb > 2 * rep.tau:
        LOG.info("%r: tb > 2 tau, the pair does not determine EH", rep)
        return UNDETERMINED
    _check_system(pair_minus, rep, "-")
    _check_system(pair_plus, rep, "+")

    n = -rep.tb
    blocks = [_block(pair_minus, n), _block(pair_plus, n)]
    matrix = np.vstack([m for m, _ in blocks])
    rhs = np.concatenate([r for _, r in blocks])
    x = solve(matrix, rhs)
    if x is None:
        raise InconsistentPairError(f"No vector at m={rep.tb} maps to {pair_minus!r} and {pair_plus!r}")

    support = frozenset(int(k) for k in np.flatnonzero(x))
    mod = module(rep.basis, rep.tb)
    if support and mod.homogeneous_grading2(support) is None:
        raise InconsistentPairError(f"The preimage {sorted(mod.label(k) for k in support)} is not homogeneous")
    if assume_tight and not any(mod.elements[k].kind == "u" for k in support):
        raise InconsistentPairError(f"EH of {rep!r} would have no unstable component")

    LOG.debug("Reconstructed EH of %r: %s", rep, sorted(mod.label(k) for k in support))
    return support


def equivalence_test(rep0, cls0, cls0_reversed, rep1, cls1, cls1_reversed):
    """Compare EH of two reps through their classes and those of the reversed knots.

    Different classes always mean different EH. Equal classes mean equal EH
    only when ``tb <= 2 tau``; otherwise the answer is ``UNDECIDED``.
    """
    if rep0.basis != rep1.basis:
        raise KnotMismatchError(f"{rep0!r} and {rep1!r} are different knots")
    if (rep0.tb, rep0.r) != (rep1.tb, rep1.r):
        LOG.info("%r and %r have different classical invariants", rep0, rep1)
        return DISTINCT

    if cls0 != cls1 or cls0_reversed != cls1_reversed:
        return DISTINCT
    if rep0.tb <= 2 * rep0.tau:
        return EQUIVALENT
    return UNDECIDED
