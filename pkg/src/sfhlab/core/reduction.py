# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Cancellation of filtered complexes down to arrow normal form.

The engine cancels the shortest entry of the differential first, breaking
ties on the smallest ``(row, col)``. After every cancellation the remaining
entries are updated by the zig-zag rule. Since every entry left is at least
as long as the one just cancelled, the arrows that come out are the bars of
the filtered complex.
"""

import heapq
import logging
from collections import Counter
from collections import defaultdict
from collections import namedtuple

import numpy as np

from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import NotAKnotError

from .f2 import dense_rank
from .f2 import kernel_basis
from .polynomials import deconvolve

LOG = logging.getLogger(__name__)

Bar = namedtuple("Bar", ["source", "target", "length2"])


def filtered_length(source2, target2):
    return source2 - target2


def u_exponent_length(source2, target2):
    return target2 - source2


class Reduction:
    def __init__(self, gradings2, survivors, bars):
        self.gradings2 = gradings2
        self.survivors = tuple(sorted(survivors))
        self.bars = tuple(bars)

    def survivor_gradings2(self):
        return Counter(self.gradings2[i] for i in self.survivors)

    def __repr__(self):
        return f"Reduction(survivors={len(self.survivors)}, bars={len(self.bars)})"


def cancel(gradings2, entries, length=filtered_length, limit2=None):
    """Cancel ``entries`` (``(target, source)`` pairs) of a complex.

    ``length(source2, target2)`` gives the doubled length of an entry; entries
    of doubled length ``>= limit2`` are treated as zero.
    """
    n = len(gradings2)
    targets = defaultdict(set)
    sources = defaultdict(set)
    heap = []

    def toggle(t, s):
        if t == s:
            raise InvariantError(f"Generator {s} maps to itself")
        ell = length(gradings2[s], gradings2[t])
        if ell < 0:
            raise InvariantError(f"Entry {s} -> {t} has negative length {ell}")
        if limit2 is not None and ell >= limit2:
            return
        if t in targets[s]:
            targets[s].discard(t)
            sources[t].discard(s)
        else:
            targets[s].add(t)
            sources[t].add(s)
            heapq.heappush(heap, (ell, t, s))

    def remove(v):
        for z in targets.pop(v, ()):
            sources[z].discard(v)
        for w in sources.pop(v, ()):
            targets[w].discard(v)

    for t, s in entries:
        toggle(t, s)

    alive = set(range(n))
    bars = []
    while heap:
        ell, t, s = heapq.heappop(heap)
        if t not in targets.get(s, ()):
            continue
        ws = sources[t] - {s}
        zs = targets[s] - {t}
        remove(s)
        remove(t)
        for w in ws:
            for z in zs:
                toggle(z, w)
        alive.discard(s)
        alive.discard(t)
        bars.append(Bar(s, t, ell))

    LOG.debug("Cancelled %s pairs out of %s generators, %s survive", len(bars), n, len(alive))
    return Reduction(gradings2, alive, bars)


class ReducedBasis:
    """Invariant data of a basis ``{eta_0, eta_{2i-1} -> eta_{2i}, eta'}``.

    Gradings are integers here; pairs are ``(A_high, A_low)``.
    """

    def __init__(self, tau, pairs, primed_pair_count=0, genus=None):
        self.tau = int(tau)
        self.pairs = tuple(sorted(((int(h), int(lo)) for h, lo in pairs), key=lambda p: (-p[0], -p[1])))
        self.primed_pair_count = int(primed_pair_count)

        support = [abs(self.tau)] + [abs(a) for p in self.pairs for a in p]
        self.genus = max(support) if genus is None else int(genus)

        for high, low in self.pairs:
            if high - low < 1:
                raise InvariantError(f"Arrow ({high}, {low}) must drop the grading")
        if max(support) > self.genus:
            raise InvariantError(f"Gradings exceed the genus {self.genus}")

    @property
    def eta0_grading(self):
        return self.tau

    @property
    def deltas(self):
        return [high - low for high, low in self.pairs]

    def hfk_hat_dims(self):
        dims = Counter({self.tau: 1})
        for high, low in self.pairs:
            dims[high] += 1
            dims[low] += 1
        return dict(sorted(dims.items()))

    def top_dimension(self):
        return self.hfk_hat_dims().get(self.genus, 0)

    def __eq__(self, other):
        if not isinstance(other, ReducedBasis):
            return NotImplemented
        return (self.tau, self.pairs, self.genus) == (other.tau, other.pairs, other.genus)

    def __hash__(self):
        return hash((self.tau, self.pairs, self.genus))

    def __repr__(self):
        return f"ReducedBasis(tau={self.tau}, pairs={list(self.pairs)}, genus={self.genus})"


def _halve(value2):
    if value2 % 2:
        raise InvariantError(f"Knot gradings must be integral, got {value2}/2")
    return value2 // 2


def reduce_to_eta_basis(c):
    """Reduce a bifiltered complex (possibly carrying tensor factors)."""
    k = c.tensor_factors
    gradings2 = [g.grading2 for g in c.generators]
    reduction = cancel(gradings2, c.differential.entries)

    if len(reduction.survivors) != 2**k:
        raise NotAKnotError(
            f"Total homology has dimension {len(reduction.survivors)}, expected {2**k}"
        )

    survivors = Counter()
    for a2, count in reduction.survivor_gradings2().items():
        survivors[_halve(a2)] += count
    eta0 = deconvolve(survivors, k)
    if len(eta0) != 1 or list(eta0.values()) != [1]:
        raise InvariantError(f"Surviving generators {dict(survivors)} do not come from a single class")
    (tau,) = eta0

    zero_length = 0
    by_delta = defaultdict(Counter)
    for bar in reduction.bars:
        if bar.length2 == 0:
            zero_length += 1
        else:
            by_delta[_halve(bar.length2)][_halve(gradings2[bar.source])] += 1

    if zero_length % 2**k:
        raise InvariantError(f"{zero_length} horizontal pairs are not divisible by 2^{k}")

    pairs = []
    for delta, highs in sorted(by_delta.items()):
        for high, count in deconvolve(highs, k).items():
            if count < 0:
                raise InvariantError(f"Negative arrow count at ({high}, {delta})")
            pairs.extend([(high, high - delta)] * count)

    basis = ReducedBasis(tau, pairs, primed_pair_count=zero_length // 2**k)
    LOG.debug("Reduced basis %s", basis)
    return basis


def tau_from_filtration(c):
    """Smallest ``s`` with ``H(A <= s) -> H(total)`` nonzero, from ranks alone."""
    d = c.differential.dense()
    boundaries = d.T
    brank = dense_rank(boundaries)
    if len(c) - 2 * brank != 2**c.tensor_factors:
        raise NotAKnotError(f"Total homology has dimension {len(c) - 2 * brank}")

    levels = sorted({g.grading2 for g in c.generators})
    for s2 in levels:
        cols = c.sublevel(s2)
        kernel = kernel_basis(d[:, cols])
        if len(kernel) == 0:
            continue
        lifted = np.zeros((len(kernel), len(c)), dtype=np.uint8)
        lifted[:, cols] = kernel
        if dense_rank(np.vstack([boundaries, lifted])) > brank:
            return _halve(s2) + c.tensor_factors
    raise InvariantError("No sublevel carries the generator of the total homology")
