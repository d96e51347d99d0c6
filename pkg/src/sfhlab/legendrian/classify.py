# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging

from sfhlab.exceptions import NonHomogeneousClassError
from sfhlab.limits.classes import class_at
from sfhlab.surgery.module import is_stable

from .rep import stabilize

LOG = logging.getLogger(__name__)

TIGHT_COMPATIBLE = "tight-compatible"
NECESSARILY_OVERTWISTED = "necessarily-overtwisted"

TIGHT = "tight"
OVERTWISTED = "overtwisted"
NOT_FIBRED = "not-fibred"


def classify(rep, cls):
    """Torsion classes can only come from overtwisted structures."""
    if not cls.is_zero() and cls.grading2 is None:
        raise NonHomogeneousClassError(f"{cls!r} is not homogeneous")

    if not rep.unstable_range:
        verdict = NECESSARILY_OVERTWISTED
    elif cls.is_torsion():
        verdict = NECESSARILY_OVERTWISTED
    else:
        verdict = TIGHT_COMPATIBLE
    LOG.debug("%r with %r: %s", rep, cls, verdict)
    return verdict


def psi_infinity_vanishes(rep, support):
    """Whether a vector of the module at slope ``tb`` is stable."""
    return is_stable(support, rep.basis, rep.tb)


def stabilize_class(cls, sign):
    """Class of the stabilised rep: the image under ``sigma_sign`` one slope further."""
    system = cls.system
    support = system.push(cls.n, cls.support, 1, sign=sign)
    return class_at(system, cls.n + 1, support)


def transverse_class(rep, cls):
    """The class of the transverse pushoff is the class of any Legendrian approximation."""
    return cls


def transverse_pushoff_invariance(rep, cls):
    """Negative stabilisation leaves the transverse class unchanged."""
    stabilised = stabilize(rep, "-")
    pushed = stabilize_class(cls, cls.system.direct_sign)
    return transverse_class(stabilised, pushed) == transverse_class(rep, cls)


def fibred_tightness(basis):
    """Tightness of the contact structure supported by a fibred knot's open book."""
    if basis.top_dimension() != 1:
        return NOT_FIBRED
    return TIGHT if basis.tau == basis.genus else OVERTWISTED
