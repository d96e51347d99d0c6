# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Closed-form sutured Floer homology of a knot complement with slope ``m`` sutures.

The basis is ``d[i,j]`` (``1 <= j <= delta(i)``), ``d*[i,j]`` and
``u[l]`` (``1 <= l <= |2 tau - m|``). Gradings are doubled; the module is
symmetric under ``A -> 2 - A``.
"""

import logging
from collections import Counter
from collections import namedtuple

from sfhlab.core.f2 import F2Matrix
from sfhlab.exceptions import InvariantError

LOG = logging.getLogger(__name__)

BasisElement = namedtuple("BasisElement", ["kind", "i", "j", "grading2"])


def _label(kind, i, j):
    if kind == "u":
        return f"u[{j}]"
    return f"{kind}[{i},{j}]"


class SurgeryModule:
    def __init__(self, basis, m, elements):
        self.basis = basis
        self.m = m
        self.elements = tuple(elements)
        self.index = {(e.kind, e.i, e.j): k for k, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"SurgeryModule(m={self.m}, dim={len(self)})"

    def label(self, k):
        e = self.elements[k]
        return _label(e.kind, e.i, e.j)

    def labels(self):
        return [self.label(k) for k in range(len(self))]

    def find(self, kind, i, j):
        """Position of a basis element, or ``None`` when it is out of range."""
        return self.index.get((kind, i, j))

    def u(self, ell):
        return self.find("u", 0, ell)

    def d(self, i, j):
        return self.find("d", i, j)

    def d_star(self, i, j):
        return self.find("d*", i, j)

    @property
    def unstable_count(self):
        return abs(2 * self.basis.tau - self.m)

    def positions(self, kind):
        return [k for k, e in enumerate(self.elements) if e.kind == kind]

    def grading2(self, k):
        return self.elements[k].grading2

    def dims(self):
        return dict(sorted(Counter(e.grading2 for e in self.elements).items()))

    def homogeneous_grading2(self, support):
        gradings = {self.elements[k].grading2 for k in support}
        if len(gradings) > 1:
            return None
        return gradings.pop() if gradings else None

    def level(self, grading2):
        return [k for k, e in enumerate(self.elements) if e.grading2 == grading2]

    @property
    def dPlus(self):
        return [(e.i, e.j, e.grading2) for e in self.elements if e.kind == "d"]

    @property
    def dStar(self):
        return [(e.i, e.j, e.grading2) for e in self.elements if e.kind == "d*"]

    @property
    def unstable(self):
        return [(e.j, e.grading2) for e in self.elements if e.kind == "u"]


def d_grading2(basis, i, j, m):
    high, _ = basis.pairs[i - 1]
    return 2 * high - 2 * (j - 1) + 1 - m


def u_grading2(basis, ell, m):
    tau = basis.tau
    if m <= 2 * tau:
        return 2 * tau - 2 * (ell - 1) + 1 - m
    return 2 * tau + 2 * (ell - 1) + 3 - m


def structure_module(basis, m):
    """Named basis of the module at slope ``m`` with its closed-form gradings."""
    elements = []
    for i, (high, low) in enumerate(basis.pairs, start=1):
        for j in range(1, high - low + 1):
            elements.append(BasisElement("d", i, j, d_grading2(basis, i, j, m)))
    for i, (high, low) in enumerate(basis.pairs, start=1):
        for j in range(1, high - low + 1):
            elements.append(BasisElement("d*", i, j, 4 - d_grading2(basis, i, j, m)))
    for ell in range(1, abs(2 * basis.tau - m) + 1):
        elements.append(BasisElement("u", 0, ell, u_grading2(basis, ell, m)))
    return SurgeryModule(basis, m, elements)


def _sigma_image(sign, e, source, target):
    """Position in ``target`` of the image of ``e``, or ``None`` for zero."""
    m = source.m
    tau = source.basis.tau
    if e.kind == "d":
        return target.d(e.i, e.j) if sign == "-" else target.d(e.i, e.j + 1)
    if e.kind == "d*":
        return target.d_star(e.i, e.j + 1) if sign == "-" else target.d_star(e.i, e.j)
    ell = e.j
    if m <= 2 * tau:
        return target.u(ell) if sign == "-" else target.u(ell + 1)
    if sign == "-":
        return None if ell == m - 2 * tau else target.u(ell)
    return target.u(ell - 1)


def sigma_matrix(sign, basis, m, source=None, target=None):
    """Matrix of the stabilisation map from slope ``m`` to ``m - 1``.

    ``sign`` is ``"-"`` (degree +1/2) or ``"+"`` (degree -1/2); images that fall
    out of range are zero.
    """
    if sign not in ("-", "+"):
        raise ValueError(f"Sign must be '+' or '-', got {sign!r}")
    source = source or structure_module(basis, m)
    target = target or structure_module(basis, m - 1)
    entries = []
    for col, e in enumerate(source.elements):
        row = _sigma_image(sign, e, source, target)
        if row is not None:
            entries.append((row, col))
    return F2Matrix(len(target), len(source), entries)


def sigma_degree2(sign):
    return 1 if sign == "-" else -1


def check_homogeneous(matrix, source, target, degree2):
    for row, col in matrix.entries:
        shift = target.grading2(row) - source.grading2(col)
        if shift != degree2:
            raise InvariantError(
                f"{source.label(col)} -> {target.label(row)} has degree {shift}/2, expected {degree2}/2"
            )


def stabilisation_power(sign, basis, m, steps):
    """``sigma^steps`` from slope ``m`` to ``m - steps``."""
    result = F2Matrix.identity(len(structure_module(basis, m)))
    for k in range(steps):
        result = sigma_matrix(sign, basis, m - k) @ result
    return result


def normalised(support, mod):
    """Slope-free form of a vector: ``(kind, i, grading2)`` for each element.

    ``sigma_- sigma_+`` has degree 0 and keeps kinds and indices, so images of
    one vector under successive powers agree in this form once they stabilise.
    """
    return frozenset((mod.elements[k].kind, mod.elements[k].i, mod.elements[k].grading2) for k in support)


def psi_infinity(support, basis, m, power=None):
    """Image of a vector under ``(sigma_- sigma_+)^N``, certified against ``N + 1``.

    Returns the support of the image at slope ``m - 2N``.
    """
    n = power if power is not None else 2 * basis.genus + 1

    def apply(steps):
        vector = frozenset(support)
        slope = m
        for _ in range(steps):
            vector = sigma_matrix("+", basis, slope).apply(vector)
            vector = sigma_matrix("-", basis, slope - 1).apply(vector)
            slope -= 2
        return vector

    image, further = apply(n), apply(n + 1)
    here = normalised(image, structure_module(basis, m - 2 * n))
    there = normalised(further, structure_module(basis, m - 2 * n - 2))
    if here != there:
        raise InvariantError(f"(sigma_- sigma_+)^N did not stabilise at N={n}")
    return image


def is_stable(support, basis, m):
    return not psi_infinity(support, basis, m)
