# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

# -E NAME -> markers skipped under that name
SKIPPED_MARKERS = {
    "short": {"long_test"},
    "long": set(),
    "release": set(),
}


def pytest_addoption(parser):
    lines = ["NAME: short, long or release; runs a subset of the tests."]
    for name, markers in SKIPPED_MARKERS.items():
        what = f"skip tests marked {', '.join(sorted(markers))}" if markers else "run every test"
        lines.append(f"'{name}': {what}.")
    parser.addoption("-E", action="store", metavar="NAME", default="short", help="\n".join(lines))


def pytest_runtest_setup(item):
    level = item.config.getoption("-E")
    skipped = SKIPPED_MARKERS[level] & {m.name for m in item.iter_markers()}
    if skipped:
        pytest.skip(f"marked {', '.join(sorted(skipped))}, not run with -E {level}")
