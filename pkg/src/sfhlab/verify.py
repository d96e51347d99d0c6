# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Machine checks of the surgery model against the grid computation."""

import logging
from collections import namedtuple

import numpy as np

from sfhlab.core.complexes import homology_dims
from sfhlab.core.f2 import F2Matrix
from sfhlab.core.reduction import reduce_to_eta_basis
from sfhlab.core.settings import SETTINGS
from sfhlab.core.thread import map_ordered
from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import VerificationFailure
from sfhlab.grids.hat import cfk_hat
from sfhlab.grids.minus import hfk_minus
from sfhlab.limits.classes import check_iota
from sfhlab.limits.colimit import colimit
from sfhlab.limits.decomposition import stable_decomposition
from sfhlab.limits.system import build_system
from sfhlab.limits.system import minimal_depth
from sfhlab.limits.system import module
from sfhlab.limits.system import sigma
from sfhlab.surgery.module import check_homogeneous
from sfhlab.surgery.module import sigma_degree2
from sfhlab.surgery.tiles import build_tiles
from sfhlab.surgery.tiles import chain_commutator
from sfhlab.surgery.tiles import induced_map
from sfhlab.surgery.tiles import minimal_tile_count
from sfhlab.surgery.tiles import stab_chain_map

LOG = logging.getLogger(__name__)

STRUCTURE_THEOREM = "structure-theorem"
STABMAPS = "stabmaps"
DEGREE = "degree"
ISO_SFH = "isoSFH"
DECOMPOSITION = "decomposition"

CHECKS = (STRUCTURE_THEOREM, STABMAPS, DEGREE, ISO_SFH, DECOMPOSITION)

CheckResult = namedtuple("CheckResult", ["check", "slope", "passed", "message"])


def corrupt(matrix, rng=None):
    """Flip one entry of a matrix (fault injection for the suite's own tests).

    The entry is ``(0, 0)``, or drawn from ``rng`` when one is given.
    """
    if not matrix.rows or not matrix.cols:
        return matrix
    if rng is None:
        r, c = 0, 0
    else:
        r, c = int(rng.integers(matrix.rows)), int(rng.integers(matrix.cols))
    return matrix + F2Matrix(matrix.rows, matrix.cols, [(r, c)])


def slope_rng(seed, m):
    # one stream per slope, so threads do not change the draws
    return np.random.default_rng([seed % 2**32, m % 2**32])


def default_slopes(basis, margin=None):
    margin = SETTINGS.get("slope-margin") if margin is None else margin
    top = -minimal_tile_count(basis)
    return list(range(top - margin, top + 1))


def check_structure_theorem(basis, m):
    tiles = build_tiles(basis, m)
    found = homology_dims(tiles.graded_complex())
    expected = tiles.module.dims()
    if found != expected:
        raise VerificationFailure(STRUCTURE_THEOREM, f"m={m}: tiles give {found}, expected {expected}")


def check_stabmaps(basis, m, corrupt_sigma_plus=False, rng=None):
    for sign in ("-", "+"):
        expected = sigma(sign, basis, m)
        if sign == "+" and corrupt_sigma_plus:
            expected = corrupt(expected, rng)
        try:
            found = induced_map(stab_chain_map(sign, basis, m))
        except InvariantError as e:
            raise VerificationFailure(STABMAPS, f"m={m}: {e}") from e
        if found != expected:
            raise VerificationFailure(STABMAPS, f"m={m}: induced s{sign} differs from sigma{sign}")

    if chain_commutator(basis, m):
        raise VerificationFailure(STABMAPS, f"m={m}: s- and s+ do not commute on the tiles")

    first = sigma("-", basis, m - 1) @ sigma("+", basis, m)
    second = sigma("+", basis, m - 1) @ sigma("-", basis, m)
    if first != second:
        raise VerificationFailure(STABMAPS, f"m={m}: sigma- and sigma+ do not commute")


def check_degree(basis, m):
    source, target = module(basis, m), module(basis, m - 1)
    for sign in ("-", "+"):
        try:
            check_homogeneous(sigma(sign, basis, m), source, target, sigma_degree2(sign))
        except InvariantError as e:
            raise VerificationFailure(DEGREE, f"m={m}: {e}") from e


def check_decomposition(basis, m, depth=None):
    mod = module(basis, m)
    decomposition = stable_decomposition(mod, basis)
    stable = sum(basis.deltas)
    found = (len(decomposition.s_plus), len(decomposition.unstable), len(decomposition.s_minus))
    expected = (stable, mod.unstable_count, stable)
    if found != expected:
        raise VerificationFailure(DECOMPOSITION, f"m={m}: dimensions {found}, expected {expected}")

    for orientation in ("-", "+"):
        system = build_system(basis, depth, orientation)
        if system.n0 <= -m <= system.n_max:
            check_iota(system, -m)


def check_iso_sfh(basis, grid, depth=None):
    expected = hfk_minus(grid)
    for orientation in ("-", "+"):
        found = colimit(build_system(basis, depth, orientation))
        if not found.same_module(expected):
            raise VerificationFailure(ISO_SFH, f"colimit {found} ({orientation}) differs from {expected}")


def _run(check, slope, func, *args, **kwargs):
    try:
        func(*args, **kwargs)
    except (VerificationFailure, InvariantError) as e:
        LOG.warning("%s failed at slope %s: %s", check, slope, e)
        return CheckResult(check, slope, False, str(e))
    return CheckResult(check, slope, True, "")


class SuiteReport:
    def __init__(self, name, basis, results, seed=None):
        self.name = name
        self.basis = basis
        self.seed = seed
        self.results = sorted(results, key=lambda r: (CHECKS.index(r.check), r.slope is not None, r.slope or 0))

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def matrix(self):
        """``{check: {slope: passed}}``, with ``None`` for knot-wide checks."""
        table = {}
        for r in self.results:
            table.setdefault(r.check, {})[r.slope] = r.passed
        return table

    def __repr__(self):
        return f"SuiteReport({self.name}, {len(self.results)} checks, passed={self.passed})"


def run_suite(grid, slopes=None, depth=None, checks=CHECKS, jobs=1, corrupt_sigma_plus=False, seed=None):
    """Run ``checks`` on ``slopes``; ``seed`` (default: the random-seed setting) drives the random draws."""
    seed = SETTINGS.get("random-seed") if seed is None else seed
    basis = reduce_to_eta_basis(cfk_hat(grid))
    depth = max(depth or 0, minimal_depth(basis))
    slopes = default_slopes(basis) if slopes is None else sorted(slopes)
    LOG.info("Verifying %r (%s) on slopes %s..%s", grid, basis, slopes[0], slopes[-1])

    per_slope = {
        STRUCTURE_THEOREM: check_structure_theorem,
        STABMAPS: lambda b, m: check_stabmaps(b, m, corrupt_sigma_plus, slope_rng(seed, m)),
        DEGREE: check_degree,
        DECOMPOSITION: lambda b, m: check_decomposition(b, m, depth),
    }
    tasks = [(check, m) for check in checks if check in per_slope for m in slopes]

    results = map_ordered(lambda task: _run(task[0], task[1], per_slope[task[0]], basis, task[1]), tasks, jobs)
    if ISO_SFH in checks:
        results.append(_run(ISO_SFH, None, check_iso_sfh, basis, grid, depth))

    report = SuiteReport(grid.name, basis, results, seed)
    LOG.info("%r", report)
    return report
