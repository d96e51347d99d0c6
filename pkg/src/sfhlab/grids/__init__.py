# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

from .alexander import alexander_polynomial
from .alexander import grid_euler_characteristic
from .diagram import GridDiagram
from .diagram import corpus_names
from .diagram import load_grid
from .diagram import mirror_grid
from .diagram import parse_grid
from .diagram import reverse_grid
from .diagram import stabilise_grid
from .diagram import transpose_grid
from .hat import cfk_hat
from .legendrian import legendrian_numbers
from .minus import UModule
from .minus import hfk_minus

__all__ = [
    "alexander_polynomial",
    "cfk_hat",
    "corpus_names",
    "GridDiagram",
    "grid_euler_characteristic",
    "hfk_minus",
    "legendrian_numbers",
    "load_grid",
    "mirror_grid",
    "parse_grid",
    "reverse_grid",
    "stabilise_grid",
    "transpose_grid",
    "UModule",
]
