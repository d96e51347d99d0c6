# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Grid diagrams and grid moves.

Columns and rows are numbered ``0 .. n-1`` from the left and from the bottom.
``x_perm[c]`` and ``o_perm[c]`` are the rows of the X and O markers of column
``c``. The knot runs from X to O along columns and from O to X along rows;
vertical segments cross over horizontal ones.
"""

import logging
import os
import re

from sfhlab.core.settings import SETTINGS
from sfhlab.exceptions import GridFormatError
from sfhlab.exceptions import NotAKnotError

LOG = logging.getLogger(__name__)

MAX_GRID_SIZE = 8

_LINE = re.compile(r"^\s*([XO])\s*:\s*(.*)$")


class GridDiagram:
    __slots__ = ("n", "x_perm", "o_perm", "name")

    def __init__(self, x_perm, o_perm, name=None):
        self.x_perm = tuple(int(r) for r in x_perm)
        self.o_perm = tuple(int(r) for r in o_perm)
        self.n = len(self.x_perm)
        self.name = name
        self._validate()

    def _validate(self):
        n = self.n
        if n < 2:
            raise GridFormatError(f"Grid size must be at least 2, got {n}")
        if n > MAX_GRID_SIZE:
            raise GridFormatError(f"Grids larger than {MAX_GRID_SIZE} are not supported, got {n}")
        if len(self.o_perm) != n:
            raise GridFormatError(f"X has {n} entries but O has {len(self.o_perm)}")
        for label, perm in (("X", self.x_perm), ("O", self.o_perm)):
            if sorted(perm) != list(range(n)):
                raise GridFormatError(f"{label} markers {list(perm)} are not a permutation of 0..{n - 1}")
        for c in range(n):
            if self.x_perm[c] == self.o_perm[c]:
                raise GridFormatError(f"X and O collide in column {c}, row {self.x_perm[c]}")
        components = len(self.components())
        if components != 1:
            raise NotAKnotError(f"Grid describes a link with {components} components")

    def x_column(self, row):
        return self.x_perm.index(row)

    def o_column(self, row):
        return self.o_perm.index(row)

    def components(self):
        """Columns visited by each component, following X -> O -> X."""
        seen = set()
        result = []
        for start in range(self.n):
            if start in seen:
                continue
            cycle = []
            c = start
            while c not in seen:
                seen.add(c)
                cycle.append(c)
                c = self.x_column(self.o_perm[c])
            result.append(cycle)
        return result

    def vertical_direction(self, c):
        return 1 if self.o_perm[c] > self.x_perm[c] else -1

    def __eq__(self, other):
        if not isinstance(other, GridDiagram):
            return NotImplemented
        return (self.x_perm, self.o_perm) == (other.x_perm, other.o_perm)

    def __hash__(self):
        return hash((self.x_perm, self.o_perm))

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"GridDiagram({self.n}{name}, X={list(self.x_perm)}, O={list(self.o_perm)})"

    def to_text(self):
        return "\n".join(
            [
                str(self.n),
                "X:" + ",".join(map(str, self.x_perm)),
                "O:" + ",".join(map(str, self.o_perm)),
            ]
        ) + "\n"


def _parse_perm(text, what):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise GridFormatError(f"Cannot parse {what} markers '{text.strip()}'")


def parse_grid(text, name=None):
    """Parse ``n``, ``X:...`` and ``O:...`` lines (``/`` also separates lines)."""
    lines = []
    for line in text.replace("/", "\n").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)

    if len(lines) != 3:
        raise GridFormatError(f"Expected 3 lines (n, X:, O:), got {len(lines)}")

    try:
        n = int(lines[0])
    except ValueError:
        raise GridFormatError(f"First line must be the grid size, got '{lines[0]}'")

    perms = {}
    for line in lines[1:]:
        m = _LINE.match(line)
        if m is None:
            raise GridFormatError(f"Cannot parse line '{line}'")
        if m.group(1) in perms:
            raise GridFormatError(f"{m.group(1)} markers given twice")
        perms[m.group(1)] = _parse_perm(m.group(2), m.group(1))

    if set(perms) != {"X", "O"}:
        raise GridFormatError("Both X: and O: lines are required")

    for label, perm in perms.items():
        if len(perm) != n:
            raise GridFormatError(f"{label} has {len(perm)} entries, expected {n}")

    return GridDiagram(perms["X"], perms["O"], name=name)


def grid_directories():
    return [os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")] + list(
        SETTINGS.get("grid-directories")
    )


def load_grid(name_or_path):
    """Load a grid from a file, or by name from the grid directories."""
    if os.path.exists(name_or_path):
        path = name_or_path
    else:
        path = None
        for directory in grid_directories():
            candidate = os.path.join(os.path.expanduser(directory), f"{name_or_path}.grid")
            if os.path.exists(candidate):
                path = candidate
                break
        if path is None:
            raise GridFormatError(f"Cannot find grid '{name_or_path}'")

    LOG.debug("Loading grid %s", path)
    with open(path) as f:
        name = os.path.splitext(os.path.basename(path))[0]
        return parse_grid(f.read(), name=name)


def corpus_names():
    directory = grid_directories()[0]
    return sorted(os.path.splitext(f)[0] for f in os.listdir(directory) if f.endswith(".grid"))


def _named(grid, suffix):
    return f"{grid.name}-{suffix}" if grid.name else None


def mirror_grid(grid):
    """Reflect the rows; the result is the mirror knot."""
    n = grid.n
    return GridDiagram(
        [n - 1 - r for r in grid.x_perm],
        [n - 1 - r for r in grid.o_perm],
        name=_named(grid, "mirror"),
    )


def reverse_grid(grid):
    """Swap the X and O markers; the result is the reversed knot."""
    return GridDiagram(grid.o_perm, grid.x_perm, name=_named(grid, "reversed"))


def _inverse(perm):
    inverse = [0] * len(perm)
    for c, r in enumerate(perm):
        inverse[r] = c
    return inverse


def transpose_grid(grid):
    """Swap rows and columns."""
    return GridDiagram(_inverse(grid.x_perm), _inverse(grid.o_perm), name=_named(grid, "transposed"))


def stabilise_grid(grid, column):
    """Stabilise at the X marker of ``column``; the size grows by one."""
    if not 0 <= column < grid.n:
        raise GridFormatError(f"Column {column} outside a grid of size {grid.n}")

    r = grid.x_perm[column]

    def shift(row):
        return row if row <= r else row + 1

    x_perm, o_perm = [], []
    for c in range(grid.n):
        if c == column:
            x_perm += [r + 1, r]
            o_perm += [shift(grid.o_perm[c]), r + 1]
        else:
            x_perm.append(shift(grid.x_perm[c]))
            o_perm.append(shift(grid.o_perm[c]))

    return GridDiagram(x_perm, o_perm, name=_named(grid, "stabilised"))
