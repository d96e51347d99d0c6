# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging

from sfhlab.core.reduction import reduce_to_eta_basis
from sfhlab.grids.hat import cfk_hat
from sfhlab.grids.legendrian import legendrian_numbers

LOG = logging.getLogger(__name__)

SIGNS = ("-", "+")


class LegendrianRep:
    """A Legendrian representative known through its knot type and ``(tb, r)``."""

    def __init__(self, basis, tb, r, orientation="+", grid=None, name=None):
        if orientation not in SIGNS:
            raise ValueError(f"Orientation must be '-' or '+', got {orientation!r}")
        self.basis = basis
        self.tb = int(tb)
        self.r = int(r)
        self.orientation = orientation
        self.grid = grid
        self.name = name

    def __repr__(self):
        name = f"{self.name}, " if self.name else ""
        return f"LegendrianRep({name}tb={self.tb}, r={self.r}, {self.orientation})"

    def __eq__(self, other):
        if not isinstance(other, LegendrianRep):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.basis, self.tb, self.r, self.orientation)

    @property
    def tau(self):
        return self.basis.tau

    @property
    def integral_limit_grading(self):
        """``(tb - r + 1) / 2`` is an integer exactly when ``tb + r`` is odd."""
        return (self.tb + self.r) % 2 == 1

    @property
    def admissible(self):
        """The rep could live in the standard contact structure."""
        return self.tb + self.r <= 2 * self.tau - 1

    @property
    def unstable_range(self):
        """``tb + |r| <= 2 tau - 1``: EH's grading meets an unstable generator."""
        return self.tb + abs(self.r) <= 2 * self.tau - 1

    def reversed(self):
        """The same front with the opposite orientation, ``-L``."""
        other = "-" if self.orientation == "+" else "+"
        return LegendrianRep(self.basis, self.tb, -self.r, other, self.grid, self.name)

    def to_dict(self):
        return {
            "knot": self.name,
            "tb": self.tb,
            "r": self.r,
            "orientation": self.orientation,
        }


def stabilize(rep, sign):
    """Negative stabilisation lowers ``r``, positive raises it; both lower ``tb``."""
    if sign not in SIGNS:
        raise ValueError(f"Sign must be '-' or '+', got {sign!r}")
    r = rep.r - 1 if sign == "-" else rep.r + 1
    return LegendrianRep(rep.basis, rep.tb - 1, r, rep.orientation, name=rep.name)


def self_linking(rep):
    """Self-linking number of the transverse pushoff."""
    return rep.tb - rep.r


def bennequin_bound(rep):
    g = rep.basis.genus
    tau = rep.tau
    bounds = {
        "bennequin": rep.tb + rep.r <= 2 * g - 1,
        "tau": rep.tb + rep.r <= 2 * tau - 1,
        "symmetric": rep.tb + abs(rep.r) <= 2 * tau - 1,
    }
    LOG.debug("Bounds for %r: %s", rep, bounds)
    return bounds


def rep_from_grid(grid, basis=None, orientation="+"):
    if basis is None:
        basis = reduce_to_eta_basis(cfk_hat(grid))
    tb, r = legendrian_numbers(grid)
    return LegendrianRep(basis, tb, r, orientation, grid=grid, name=grid.name)
