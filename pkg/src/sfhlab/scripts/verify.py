# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging

from termcolor import colored

from .tools import DEPTH
from .tools import FORMAT
from .tools import JOBS
from .tools import SEED
from .tools import depth
from .tools import emit
from .tools import jobs
from .tools import output_format
from .tools import parse_args
from .tools import parse_slopes
from .tools import seed

LOG = logging.getLogger(__name__)


def verify_report(report):
    return {
        "knot": report.name,
        "tau": report.basis.tau,
        "genus": report.basis.genus,
        "seed": report.seed,
        "passed": report.passed,
        "checks": {
            check: {"all" if slope is None else str(slope): passed for slope, passed in slopes.items()}
            for check, slopes in report.matrix().items()
        },
        "failures": [f"{r.check} at {r.slope}: {r.message}" for r in report.failures()],
    }


class VerifyCmd:
    @parse_args(
        knot=(None, dict(metavar="KNOT", type=str, help="corpus name or path to a .grid file")),
        slopes=dict(type=parse_slopes, default=None, metavar="A:B", help="slope range (default: from the genus)"),
        check=dict(action="append", default=None, help="run only this check (repeatable)"),
        depth=DEPTH,
        jobs=JOBS,
        seed=SEED,
        format=FORMAT,
        corrupt_sigma_plus=dict(action="store_true", help="flip one entry of sigma+ (tests the suite itself)"),
    )
    def do_verify(self, args):
        """Check the tile complexes and limits of a knot against its grid."""
        from sfhlab.grids import load_grid
        from sfhlab.verify import CHECKS
        from sfhlab.verify import run_suite

        checks = tuple(args.check) if args.check else CHECKS
        unknown = set(checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"Unknown checks {sorted(unknown)}, choose from {list(CHECKS)}")

        report = run_suite(
            load_grid(args.knot),
            slopes=args.slopes,
            depth=depth(args),
            checks=checks,
            jobs=jobs(args),
            corrupt_sigma_plus=args.corrupt_sigma_plus,
            seed=seed(args),
        )
        emit(verify_report(report), output_format(args))

        if not report.passed:
            LOG.error("%s", colored(f"{len(report.failures())} check(s) failed", "red"))
            return 1
