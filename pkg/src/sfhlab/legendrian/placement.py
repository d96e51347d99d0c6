# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Where the contact class of a Legendrian rep has to sit.

EH lives in the module at slope ``tb``, at module grading ``1 - r/2``
(printed as ``-r/2``), and its image in the colimit sits at
``(tb - r + 1) / 2``.
"""

import logging

from sfhlab.exceptions import InvariantError
from sfhlab.surgery.module import structure_module

LOG = logging.getLogger(__name__)

COMPONENTS = {"d": "S+", "u": "U", "d*": "S-"}


class ContactClassPlacement:
    def __init__(self, slope, eh_grading2, limit_grading2, positions, support):
        self.slope = slope
        self.eh_grading2 = eh_grading2
        self.limit_grading2 = limit_grading2
        self.positions = tuple(positions)
        self.support = frozenset(support)

    def __repr__(self):
        return (
            f"ContactClassPlacement(m={self.slope}, eh={self.eh_grading2}/2, "
            f"limit={self.limit_grading2}/2, support={sorted(self.support)})"
        )

    @property
    def module_grading2(self):
        return self.eh_grading2 + 2

    @property
    def vanishes(self):
        """No generator at the required grading, so EH must be zero."""
        return not self.positions

    def to_dict(self):
        return {
            "slope": self.slope,
            "ehGradingTimes2": self.eh_grading2,
            "limitGradingTimes2": self.limit_grading2,
            "support": sorted(self.support),
        }


def eh_placement(rep):
    m = rep.tb
    mod = structure_module(rep.basis, m)
    eh_grading2 = -rep.r
    limit_grading2 = rep.tb - rep.r + 1
    if limit_grading2 - eh_grading2 != 1 + rep.tb:
        raise InvariantError(f"Grading shift of {rep!r} is inconsistent")

    positions = mod.level(eh_grading2 + 2)
    support = {COMPONENTS[mod.elements[k].kind] for k in positions}
    if rep.admissible and not rep.unstable_range and "U" in support:
        raise InvariantError(f"{rep!r} violates the bound but meets an unstable generator")

    placement = ContactClassPlacement(m, eh_grading2, limit_grading2, positions, support)
    LOG.debug("%r: %r", rep, placement)
    return placement


def eh_unstable_index(rep):
    """``l`` with ``u[l]`` at the EH grading, or ``None`` outside the unstable range."""
    if not rep.unstable_range:
        return None
    twice = 2 * rep.tau + 1 - rep.tb + rep.r
    if twice % 2:
        return None
    return twice // 2
