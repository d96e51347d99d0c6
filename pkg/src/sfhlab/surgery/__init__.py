# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

from .module import SurgeryModule
from .module import is_stable
from .module import psi_infinity
from .module import sigma_matrix
from .module import structure_module
from .tiles import TileComplex
from .tiles import build_tiles
from .tiles import induced_map
from .tiles import stab_chain_map

__all__ = [
    "build_tiles",
    "induced_map",
    "is_stable",
    "psi_infinity",
    "sigma_matrix",
    "stab_chain_map",
    "structure_module",
    "SurgeryModule",
    "TileComplex",
]
