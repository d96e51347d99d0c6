# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging
from collections import namedtuple

import numpy as np

from sfhlab.core.f2 import kernel_basis
from sfhlab.core.f2 import span_rank
from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import SlopeOutOfRangeError

from .system import module
from .system import sigma

LOG = logging.getLogger(__name__)

Decomposition = namedtuple("Decomposition", ["s_plus", "unstable", "s_minus", "power"])


def _power(sign, basis, m, steps):
    result = None
    for k in range(steps):
        step = sigma(sign, basis, m - k)
        result = step if result is None else step @ result
    return result


def _kernel(sign, basis, m, steps):
    matrix = _power(sign, basis, m, steps)
    rows = kernel_basis(matrix.dense()) if matrix.rows else np.eye(matrix.cols, dtype=np.uint8)
    return [frozenset(int(k) for k in np.flatnonzero(row)) for row in rows]


def _same_span(first, second, width):
    joint = span_rank(first + second, width)
    return joint == span_rank(first, width) == span_rank(second, width)


def stable_decomposition(mod, basis, power=None):
    """Split ``mod`` into ``S_+ = ker sigma_+^N``, the unstable part and ``S_- = ker sigma_-^N``.

    ``N`` defaults to ``2g + 1`` and must give the same kernels as ``N + 1``.
    The unstable part is spanned by the ``u`` generators.
    """
    n = 2 * basis.genus + 1 if power is None else power
    n = max(n, 1)
    if mod.m > 2 * basis.tau:
        raise SlopeOutOfRangeError(f"The stable decomposition needs m <= 2 tau = {2 * basis.tau}, got m={mod.m}")
    width = len(mod)

    kernels = {}
    for sign in ("+", "-"):
        kernel = _kernel(sign, basis, mod.m, n)
        if not _same_span(kernel, _kernel(sign, basis, mod.m, n + 1), width):
            raise InvariantError(f"ker sigma_{sign}^N at m={mod.m} did not stabilise at N={n}")
        kernels[sign] = kernel

    unstable = [frozenset([k]) for k in mod.positions("u")]
    total = span_rank(kernels["+"] + unstable + kernels["-"], width)
    if total != width:
        raise InvariantError(f"S_+, U and S_- do not span the module at m={mod.m} ({total} of {width})")
    if len(kernels["+"]) + len(unstable) + len(kernels["-"]) != width:
        raise InvariantError(f"S_+, U and S_- overlap at m={mod.m}")

    LOG.debug(
        "m=%s: dim S_+ = %s, dim U = %s, dim S_- = %s (N=%s)",
        mod.m,
        len(kernels["+"]),
        len(unstable),
        len(kernels["-"]),
        n,
    )
    return Decomposition(kernels["+"], unstable, kernels["-"], n)


def decompose(basis, m, power=None):
    return stable_decomposition(module(basis, m), basis, power)
