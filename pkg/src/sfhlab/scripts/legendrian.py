# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging

from .tools import DEPTH
from .tools import FORMAT
from .tools import depth
from .tools import emit
from .tools import output_format
from .tools import parse_args

LOG = logging.getLogger(__name__)


def candidate_class(rep, depth=None):
    """Limit class of the unstable generator at EH's grading, or ``None``."""
    from sfhlab.legendrian.placement import eh_unstable_index
    from sfhlab.limits import build_system
    from sfhlab.limits import class_of
    from sfhlab.limits.system import minimal_depth

    ell = eh_unstable_index(rep)
    if ell is None:
        return None
    system = build_system(rep.basis, orientation="-", depth=max(depth or 0, minimal_depth(rep.basis)))
    if -rep.tb > system.n_max:
        system = build_system(rep.basis, orientation="-", depth=-rep.tb - system.n0)
    position = system.term(-rep.tb).u(ell)
    return class_of(system, -rep.tb, [position])


def legendrian_report(rep, depth=None):
    from sfhlab.legendrian import bennequin_bound
    from sfhlab.legendrian import classify
    from sfhlab.legendrian import eh_placement
    from sfhlab.legendrian import self_linking
    from sfhlab.legendrian.classify import NECESSARILY_OVERTWISTED

    placement = eh_placement(rep)
    cls = candidate_class(rep, depth)
    verdict = NECESSARILY_OVERTWISTED if cls is None else classify(rep, cls)
    return {
        "rep": rep.to_dict(),
        "tau": rep.tau,
        "placement": placement.to_dict(),
        "bounds": bennequin_bound(rep),
        "admissible": rep.admissible,
        "selfLinking": self_linking(rep),
        "classification": verdict,
    }


class LegendrianCmd:
    @parse_args(
        knot=(None, dict(metavar="KNOT", type=str, help="corpus name or path to a .grid file")),
        tb=dict(type=int, default=None, help="Thurston-Bennequin number (default: from the grid)"),
        r=dict(type=int, default=None, help="rotation number (default: from the grid)"),
        orientation=dict(choices=["+", "-"], default="+"),
        depth=DEPTH,
        format=FORMAT,
    )
    def do_legendrian(self, args):
        """Place and classify the contact class of a Legendrian representative."""
        from sfhlab.grids import load_grid
        from sfhlab.legendrian import LegendrianRep
        from sfhlab.legendrian import rep_from_grid

        rep = rep_from_grid(load_grid(args.knot), orientation=args.orientation)
        if args.tb is not None or args.r is not None:
            tb = rep.tb if args.tb is None else args.tb
            r = rep.r if args.r is None else args.r
            rep = LegendrianRep(rep.basis, tb, r, args.orientation, name=rep.name)

        if not rep.admissible:
            LOG.warning("%r violates tb + r <= 2 tau - 1", rep)
        emit(legendrian_report(rep, depth(args)), output_format(args))
