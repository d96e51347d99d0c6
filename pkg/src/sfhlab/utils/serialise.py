# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import json
import logging

from sfhlab.core.complexes import BifilteredComplex
from sfhlab.core.complexes import Generator
from sfhlab.core.complexes import GradedComplex
from sfhlab.core.f2 import F2Matrix
from sfhlab.core.reduction import ReducedBasis
from sfhlab.grids.minus import UModule
from sfhlab.legendrian.placement import ContactClassPlacement
from sfhlab.legendrian.rep import LegendrianRep
from sfhlab.limits.colimit import LimitModule
from sfhlab.surgery.module import SurgeryModule
from sfhlab.surgery.module import structure_module

LOG = logging.getLogger(__name__)

SERIALISATION = {}
KINDS = {}


def register_serialisation(cls, serialise, create, kind=None):
    kind = kind or cls.__name__
    SERIALISATION[cls] = (kind, serialise)
    KINDS[kind] = create


def serialise_state(obj):
    for cls in type(obj).__mro__:
        if cls in SERIALISATION:
            kind, serialise = SERIALISATION[cls]
            LOG.debug("serialise %s", kind)
            return {"kind": kind, "data": serialise(obj)}
    raise TypeError(f"No serialisation registered for {type(obj).__name__}")


def deserialise_state(state):
    kind, data = state["kind"], state["data"]
    LOG.debug("deserialise %s", kind)
    if kind not in KINDS:
        raise ValueError(f"Unknown kind {kind!r}, known kinds are {sorted(KINDS)}")
    return KINDS[kind](data)


def dumps(data):
    return json.dumps(data, indent=4, sort_keys=True)


def to_json(obj):
    return dumps(serialise_state(obj))


def from_json(kind, data):
    if isinstance(data, str):
        data = json.loads(data)
    return deserialise_state({"kind": kind, "data": data})


def load_json(text):
    return deserialise_state(json.loads(text))


def _matrix(m):
    return {"rows": m.rows, "cols": m.cols, "entries": m.to_pairs()}


def _create_matrix(data):
    return F2Matrix(data["rows"], data["cols"], [tuple(e) for e in data["entries"]])


def _generators(generators):
    return [{"label": g.label, "gradingTimes2": g.grading2} for g in generators]


def _create_generators(data):
    return [Generator(g["label"], g["gradingTimes2"]) for g in data]


def _basis(b):
    return {
        "tau": b.tau,
        "pairs": [list(p) for p in b.pairs],
        "primedPairCount": b.primed_pair_count,
        "genus": b.genus,
    }


def _create_basis(data):
    return ReducedBasis(data["tau"], data["pairs"], data.get("primedPairCount", 0), data.get("genus"))


def _torsion(module):
    return [{"order": order, "topGradingTimes2": top2} for order, top2 in module.torsion]


def _create_torsion(data):
    return [(t["order"], t["topGradingTimes2"]) for t in data]


register_serialisation(F2Matrix, _matrix, _create_matrix)

register_serialisation(
    GradedComplex,
    lambda c: {
        "generators": _generators(c.generators),
        "differential": _matrix(c.differential),
        "degreeTimes2": c.degree2,
    },
    lambda d: GradedComplex(
        _create_generators(d["generators"]),
        _create_matrix(d["differential"]),
        d.get("degreeTimes2", 0),
    ),
)

register_serialisation(
    BifilteredComplex,
    lambda c: {
        "generators": _generators(c.generators),
        "dK": _matrix(c.dK),
        "dVert": _matrix(c.dVert),
        "tensorFactors": c.tensor_factors,
    },
    lambda d: BifilteredComplex(
        _create_generators(d["generators"]),
        _create_matrix(d["dK"]),
        _create_matrix(d["dVert"]),
        d.get("tensorFactors", 0),
    ),
)

register_serialisation(ReducedBasis, _basis, _create_basis)

register_serialisation(
    SurgeryModule,
    lambda mod: {
        "knot": _basis(mod.basis),
        "m": mod.m,
        "basis": [{"label": mod.label(k), "gradingTimes2": mod.grading2(k)} for k in range(len(mod))],
    },
    lambda d: structure_module(_create_basis(d["knot"]), d["m"]),
)

register_serialisation(
    UModule,
    lambda mod: {"towerTopsTimes2": list(mod.tower_tops2), "torsion": _torsion(mod), "truncation": mod.truncation},
    lambda d: UModule(d["towerTopsTimes2"], _create_torsion(d["torsion"]), d.get("truncation")),
)

register_serialisation(
    LimitModule,
    lambda mod: {
        "towerTopGradingTimes2": mod.tower_top2,
        "torsion": _torsion(mod),
        "orientation": mod.orientation,
    },
    lambda d: LimitModule([d["towerTopGradingTimes2"]], _create_torsion(d["torsion"]), d.get("orientation", "-")),
)

register_serialisation(
    LegendrianRep,
    lambda rep: dict(rep.to_dict(), basis=_basis(rep.basis)),
    lambda d: LegendrianRep(_create_basis(d["basis"]), d["tb"], d["r"], d["orientation"], name=d.get("knot")),
)

register_serialisation(
    ContactClassPlacement,
    lambda p: dict(p.to_dict(), positions=list(p.positions)),
    lambda d: ContactClassPlacement(
        d["slope"],
        d["ehGradingTimes2"],
        d["limitGradingTimes2"],
        d.get("positions", []),
        d["support"],
    ),
)
