# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

from .classes import LimitClass
from .classes import check_iota
from .classes import class_of
from .classes import iota_kernel
from .colimit import LimitModule
from .colimit import colimit
from .decomposition import decompose
from .decomposition import stable_decomposition
from .system import DirectSystem
from .system import build_system
from .system import reverse_orientation

__all__ = [
    "build_system",
    "check_iota",
    "class_of",
    "colimit",
    "decompose",
    "DirectSystem",
    "iota_kernel",
    "LimitClass",
    "LimitModule",
    "reverse_orientation",
    "stable_decomposition",
]
