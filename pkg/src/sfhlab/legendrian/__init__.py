# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

from .classify import classify
from .classify import fibred_tightness
from .classify import psi_infinity_vanishes
from .classify import stabilize_class
from .classify import transverse_class
from .classify import transverse_pushoff_invariance
from .placement import ContactClassPlacement
from .placement import eh_placement
from .reconstruct import UNDETERMINED
from .reconstruct import equivalence_test
from .reconstruct import project_pair
from .reconstruct import reconstruct_eh
from .rep import LegendrianRep
from .rep import bennequin_bound
from .rep import rep_from_grid
from .rep import self_linking
from .rep import stabilize

__all__ = [
    "bennequin_bound",
    "classify",
    "ContactClassPlacement",
    "eh_placement",
    "equivalence_test",
    "fibred_tightness",
    "LegendrianRep",
    "project_pair",
    "psi_infinity_vanishes",
    "reconstruct_eh",
    "rep_from_grid",
    "self_linking",
    "stabilize",
    "stabilize_class",
    "transverse_class",
    "transverse_pushoff_invariance",
    "UNDETERMINED",
]
