# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""The staircase of ``m' = -m`` tiles and the stabilisation chain maps.

Every tile is a copy of the reduced generators ``eta_0``, ``eta_{2i-1}``
(``odd``) and ``eta_{2i}`` (``even``). Tiles up to the cut, ``m'//2`` unless
chosen otherwise, are top tiles and the others bottom tiles. Arrows join tiles ``delta(i)`` apart inside a
region; what is left of each Alexander level, besides the named ``d`` and
``d*`` generators, is paired off in tile order keeping one survivor.
"""

import logging
from collections import defaultdict
from collections import namedtuple

from sfhlab.core.complexes import GradedComplex
from sfhlab.core.complexes import Generator
from sfhlab.core.f2 import F2Matrix
from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import SlopeOutOfRangeError

from .module import sigma_degree2
from .module import structure_module

LOG = logging.getLogger(__name__)

TileGenerator = namedtuple("TileGenerator", ["kind", "i", "tile"])


def minimal_tile_count(basis):
    """Smallest ``m'`` for which the top and bottom regions stay apart."""
    g = basis.genus
    return max(2 * g + 3, 4 * g, 1)


def check_slope(basis, m):
    if m > -minimal_tile_count(basis):
        raise SlopeOutOfRangeError(
            f"Tile complexes need m <= {-minimal_tile_count(basis)} for genus {basis.genus}, got m={m}"
        )


def _tile_label(tg):
    if tg.kind == "eta0":
        return f"e0@{tg.tile}"
    n = 2 * tg.i - 1 if tg.kind == "odd" else 2 * tg.i
    return f"e{n}@{tg.tile}"


class TileComplex:
    def __init__(self, basis, m, cut=None):
        check_slope(basis, m)
        self.basis = basis
        self.m = m
        self.tiles = -m
        self.top = self.tiles // 2 if cut is None else cut
        width = max(basis.deltas, default=0)
        if not (width <= self.top <= self.tiles - width):
            raise ValueError(f"Cut {self.top} leaves a region narrower than {width} of {self.tiles} tiles")
        self.module = structure_module(basis, m)

        self.tile_generators = []
        for t in range(1, self.tiles + 1):
            self.tile_generators.append(TileGenerator("eta0", 0, t))
            for i in range(1, len(basis.pairs) + 1):
                self.tile_generators.append(TileGenerator("odd", i, t))
                self.tile_generators.append(TileGenerator("even", i, t))
        self.index = {tg: k for k, tg in enumerate(self.tile_generators)}
        self.gradings2 = [self._grading2(tg) for tg in self.tile_generators]

        self.arrows = {}
        self._staircase_arrows()
        self._name_stable_generators()
        self._pair_levels()

        self.generators = [Generator(_tile_label(tg), a2) for tg, a2 in zip(self.tile_generators, self.gradings2)]
        n = len(self.generators)
        self.differential = F2Matrix(n, n, ((t, s) for s, t in self.arrows.items()))

        LOG.debug(
            "Tile complex m=%s cut %s: %s generators, %s arrows, %s survivors",
            m,
            self.top,
            n,
            len(self.arrows),
            len(self.representatives),
        )

    def _alexander(self, tg):
        if tg.kind == "eta0":
            return self.basis.tau
        high, low = self.basis.pairs[tg.i - 1]
        return high if tg.kind == "odd" else low

    def _grading2(self, tg):
        k2 = 1 - self.m
        a = self._alexander(tg)
        if tg.tile <= self.top:
            return 2 * a - 2 * (tg.tile - 1) + k2
        return -2 * a - 2 * (tg.tile - 1) + k2

    def is_top(self, tile):
        return tile <= self.top

    def _add_arrow(self, source, target):
        s, t = self.index[source], self.index[target]
        if s in self.arrows or t in self.arrows or s in self.arrows.values() or t in self.arrows.values():
            raise InvariantError(f"Generator used twice in the matching ({source}, {target})")
        if self.gradings2[s] != self.gradings2[t]:
            raise InvariantError(f"Arrow {source} -> {target} changes the grading")
        self.arrows[s] = t

    def _staircase_arrows(self):
        for i, (high, low) in enumerate(self.basis.pairs, start=1):
            delta = high - low
            for t in range(1, self.tiles + 1 - delta):
                if self.is_top(t + delta):
                    self._add_arrow(TileGenerator("even", i, t), TileGenerator("odd", i, t + delta))
                elif not self.is_top(t):
                    self._add_arrow(TileGenerator("even", i, t + delta), TileGenerator("odd", i, t))

    def _name_stable_generators(self):
        self.representatives = {}
        for i, (high, low) in enumerate(self.basis.pairs, start=1):
            for j in range(1, high - low + 1):
                self.representatives[self.module.d(i, j)] = self.index[TileGenerator("odd", i, j)]
                bottom = TileGenerator("odd", i, self.tiles + 1 - j)
                self.representatives[self.module.d_star(i, j)] = self.index[bottom]

    def _matched(self):
        return set(self.arrows) | set(self.arrows.values())

    def _pair_levels(self):
        named = set(self.representatives.values())
        matched = self._matched()
        levels = defaultdict(list)
        for k, a2 in enumerate(self.gradings2):
            if k not in matched and k not in named:
                levels[a2].append(k)

        tau = self.basis.tau
        k2 = 1 - self.m
        for a2, rest in sorted(levels.items()):
            etas = [k for k in rest if self.tile_generators[k].kind == "eta0"]
            kept = etas[0] if etas else rest[0]
            rest = [k for k in rest if k != kept]
            if len(rest) % 2:
                raise InvariantError(
                    f"Level {a2}/2 of the m={self.m} staircase has an even number of unpaired generators"
                )
            for s, t in zip(rest[0::2], rest[1::2]):
                self.arrows[s] = t

            twice_ell = 2 * tau + 2 + k2 - a2
            if twice_ell % 2:
                raise InvariantError(f"Level {a2}/2 is not an unstable grading")
            position = self.module.u(twice_ell // 2)
            if position is None or position in self.representatives:
                raise InvariantError(f"Level {a2}/2 does not carry a new unstable generator")
            self.representatives[position] = kept

        if len(self.representatives) != len(self.module):
            raise InvariantError(
                f"Staircase at m={self.m} has {len(self.representatives)} survivors, expected {len(self.module)}"
            )
        for position, k in self.representatives.items():
            if self.module.grading2(position) != self.gradings2[k]:
                raise InvariantError(f"{self.module.label(position)} sits at the wrong grading")

        self.survivor_positions = {k: p for p, k in self.representatives.items()}

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"TileComplex(m={self.m}, tiles={self.tiles}, cut={self.top}, generators={len(self)})"

    def key(self):
        return (self.basis, self.m, self.top)

    def boundary(self, k):
        t = self.arrows.get(k)
        return frozenset() if t is None else frozenset([t])

    def graded_complex(self):
        return GradedComplex(self.generators, self.differential)

    def box_from_top(self, k):
        """Row of generator ``k`` inside its tile, counting from the top (1-based)."""
        tg = self.tile_generators[k]
        a = self._alexander(tg)
        g = self.basis.genus
        return g - a + 1 if self.is_top(tg.tile) else a + g + 1

    def project(self, support):
        """Module positions of the survivor components of a cycle."""
        return frozenset(self.survivor_positions[k] for k in support if k in self.survivor_positions)


def build_tiles(basis, m, cut=None):
    """Tile complex of slope ``m``; ``cut`` is the last top tile, ``m'//2`` by default."""
    return TileComplex(basis, m, cut)


class ChainMap:
    def __init__(self, sign, source, target, matrix):
        self.sign = sign
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return f"ChainMap(s{self.sign}, m={self.source.m}, cut {self.source.top} -> {self.target.top})"

    def __matmul__(self, other):
        if other.target.key() != self.source.key():
            raise InvariantError(f"Cannot compose {self!r} after {other!r}")
        return self.matrix @ other.matrix

    def check(self):
        left = self.target.differential @ self.matrix
        right = self.matrix @ self.source.differential
        if left != right:
            raise InvariantError(f"s{self.sign} at m={self.source.m} is not a chain map")
        for row, col in self.matrix.entries:
            shift = self.target.gradings2[row] - self.source.gradings2[col]
            if shift != sigma_degree2(self.sign):
                raise InvariantError(f"s{self.sign} is not homogeneous at {self.source.generators[col]}")


def target_cut(sign, source):
    """Cut of ``C(m-1)`` that the tile shift of ``s+-`` respects: ``s-`` keeps it, ``s+`` moves it down one tile."""
    return source.top if sign == "-" else source.top + 1


def stab_chain_map(sign, basis, m, cut=None):
    """Chain model of the stabilisation map from ``C(m)`` to ``C(m-1)``.

    ``s-`` sends ``x`` in tile ``t`` to ``x`` in tile ``t`` and ``s+`` sends it to
    tile ``t + 1``. The target is cut so that every tile keeps its side, which
    makes both maps inclusions of complexes.
    """
    if sign not in ("-", "+"):
        raise ValueError(f"Sign must be '+' or '-', got {sign!r}")
    source = build_tiles(basis, m, cut)
    target = build_tiles(basis, m - 1, target_cut(sign, source))
    offset = 0 if sign == "-" else 1

    entries = []
    for k, tg in enumerate(source.tile_generators):
        entries.append((target.index[TileGenerator(tg.kind, tg.i, tg.tile + offset)], k))

    chain_map = ChainMap(sign, source, target, F2Matrix(len(target), len(source), entries))
    chain_map.check()
    LOG.debug("%r", chain_map)
    return chain_map


def induced_map(chain_map):
    """Matrix of the map on homology in the named bases of both modules."""
    source, target = chain_map.source, chain_map.target
    entries = []
    for position, k in sorted(source.representatives.items()):
        image = chain_map.matrix.apply([k])
        if target.differential.apply(image):
            raise InvariantError(f"Image of {source.module.label(position)} is not a cycle")
        for row in target.project(image):
            entries.append((row, position))
    return F2Matrix(len(target.module), len(source.module), entries)


def chain_commutator(basis, m, cut=None):
    """Entries where ``s-(m-1) s+(m)`` and ``s+(m-1) s-(m)`` differ on the tiles of ``C(m)``."""
    plus = stab_chain_map("+", basis, m, cut)
    minus = stab_chain_map("-", basis, m, cut)
    first = stab_chain_map("-", basis, m - 1, plus.target.top) @ plus
    second = stab_chain_map("+", basis, m - 1, minus.target.top) @ minus
    return (first + second).entries
