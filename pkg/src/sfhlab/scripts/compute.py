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

KNOT = (None, dict(metavar="KNOT", type=str, help="corpus name or path to a .grid file"))


def compute_report(grid):
    from sfhlab.core.polynomials import format_laurent
    from sfhlab.core.reduction import reduce_to_eta_basis
    from sfhlab.core.reduction import tau_from_filtration
    from sfhlab.grids import alexander_polynomial
    from sfhlab.grids import cfk_hat
    from sfhlab.grids import hfk_minus
    from sfhlab.utils.serialise import serialise_state

    cfk = cfk_hat(grid)
    basis = reduce_to_eta_basis(cfk)
    minus = hfk_minus(grid)
    return {
        "knot": grid.name,
        "gridSize": grid.n,
        "hfkHatDims": {str(a): dim for a, dim in basis.hfk_hat_dims().items()},
        "tau": basis.tau,
        "tauFromFiltration": tau_from_filtration(cfk),
        "genus": basis.genus,
        "pairs": [list(p) for p in basis.pairs],
        "alexander": format_laurent(alexander_polynomial(grid)),
        "hfkMinus": serialise_state(minus)["data"],
    }


def limit_report(grid, depth=None):
    from sfhlab.core.reduction import reduce_to_eta_basis
    from sfhlab.grids import cfk_hat
    from sfhlab.limits import build_system
    from sfhlab.limits import colimit
    from sfhlab.utils.serialise import serialise_state

    basis = reduce_to_eta_basis(cfk_hat(grid))
    report = {"knot": grid.name, "tau": basis.tau, "genus": basis.genus}
    for orientation, key in (("-", "minus"), ("+", "plus")):
        system = build_system(basis, depth, orientation)
        report[key] = dict(
            serialise_state(colimit(system))["data"],
            slopes=[system.n0, system.n_max],
        )
    return report


class ComputeCmd:
    @parse_args(knot=KNOT, format=FORMAT)
    def do_compute(self, args):
        """HFK-hat dimensions, tau, genus and HFK-minus of a grid knot."""
        from sfhlab.grids import load_grid

        emit(compute_report(load_grid(args.knot)), output_format(args))

    @parse_args(knot=KNOT, depth=DEPTH, format=FORMAT)
    def do_limit(self, args):
        """Colimits of both direct systems of sutured modules of a knot."""
        from sfhlab.grids import load_grid

        emit(limit_report(load_grid(args.knot), depth(args)), output_format(args))
