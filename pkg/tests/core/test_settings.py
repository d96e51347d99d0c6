#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import pytest

from sfhlab import settings


def test_settings():
    with settings.temporary():
        settings.reset()

        assert settings.get("number-of-jobs") == 1
        settings.set("number-of-jobs", "4")
        assert settings.get("number-of-jobs") == 4
        settings.reset("number-of-jobs")
        assert settings.get("number-of-jobs") == 1

        settings.set("grid-directories", ["/a", "/b"])
        assert settings.get("grid-directories") == ["/a", "/b"]

        settings.set("grid-directories", "/c", "/d")
        assert settings.get("grid-directories") == ["/c", "/d"]

        settings.set("progress-bars", "yes")
        assert settings.get("progress-bars") is True

        with pytest.raises(KeyError):
            settings.set("test", 42)

        with pytest.raises(KeyError):
            settings.get("test")

        with pytest.raises(ValueError):
            settings.set("number-of-jobs", 0)

        with pytest.raises(ValueError):
            settings.set("output-format", "xml")

        with pytest.raises(TypeError):
            settings.set("number-of-jobs", 1, 2)


def test_temporary():
    with settings.temporary():
        settings.set("output-format", "json")
        depth = settings.get("default-depth")

        with settings.temporary("output-format", "text"):
            assert settings.get("output-format") == "text"
            settings.set("default-depth", 12)
            assert settings.get("default-depth") == 12

        assert settings.get("output-format") == "json"
        assert settings.get("default-depth") == depth


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
