# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

from ._version import __version__
from .core.settings import SETTINGS as settings
from .grids import load_grid

__all__ = [
    "__version__",
    "load_grid",
    "settings",
]
