# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging
import os
import sys
from contextlib import contextmanager

LOG = logging.getLogger(__name__)

CORPUS = ("unknot", "right-trefoil", "left-trefoil", "figure-eight")

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_file(*args):
    return os.path.join(DATA, *args)


def grid_file(name):
    """Path of a grid shipped with the package."""
    return data_file(f"{name}.grid")


@contextmanager
def cd(directory):
    previous = os.getcwd()
    os.chdir(os.path.expanduser(directory))
    try:
        yield directory
    finally:
        os.chdir(previous)


def main(path):
    """Run one test file with every test enabled, e.g. ``python tests/test_cli.py``."""
    import pytest

    quiet = sys.argv[1:2] == ["--no-debug"]
    if not quiet:
        logging.basicConfig(level=logging.DEBUG)

    sys.exit(pytest.main(["-E", "release", "-o", f"log_cli={not quiet}", path]))
