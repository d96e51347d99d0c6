#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import json
import logging
import re

import pytest
import yaml

from sfhlab import settings
from sfhlab.scripts.main import SfhLabApp
from sfhlab.scripts.main import command_list
from sfhlab.scripts.main import main

LOG = logging.getLogger(__name__)


def run(line, capsys):
    app = SfhLabApp()
    code = app.onecmd(line)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("command", command_list())
def test_cli_no_args(command, capsys):
    _, out, _ = run(command, capsys)
    assert not out.startswith("Unknown command"), out


def test_cli_unknown(capsys):
    code, out, err = run("some unknown command", capsys)
    assert out.startswith("Unknown command"), out
    assert err == "", err
    assert code == 2


def test_cli_setting_1(capsys):
    _, out, err = run("settings --json", capsys)
    assert err == "", err

    # yaml is a superset of json. yaml.safe_load can read json
    dic = yaml.safe_load(out)

    assert len(dic) > 2

    for s in settings.dump():
        assert dic[s[0]] == s[1]


@pytest.fixture
def settings_dict():
    return {s[0]: s[1] for s in settings.dump()}


def test_cli_setting_2(capsys, monkeypatch, settings_dict):
    monkeypatch.setenv("NO_COLOR", "1")
    _, out, err = run("settings", capsys)
    assert err == "", err

    lines = out.splitlines(True)
    assert lines

    for line in lines:
        m = re.match("([^ ]*) *([^ ]+)", line)
        assert m is not None, line
        key, value = (g.strip() for g in m.groups())
        assert key in settings_dict
        assert value == str(settings_dict[key])


def test_cli_setting_set_and_reset(capsys):
    with settings.temporary():
        code, _, _ = run("settings grid-directories /a /b", capsys)
        assert not code
        assert settings.get("grid-directories") == ["/a", "/b"]

        assert run("settings number-of-jobs 0", capsys)[0] == 2

        run("settings-reset grid-directories", capsys)
        assert settings.get("grid-directories") != ["/a", "/b"]

        _, out, _ = run("settings-reset", capsys)
        assert "--all" in out


def test_cli_compute(capsys):
    code, out, _ = run("compute unknot --format json", capsys)
    assert not code
    report = json.loads(out)
    assert report["tau"] == 0
    assert report["tauFromFiltration"] == 0
    assert report["hfkHatDims"] == {"0": 1}
    assert report["hfkMinus"]["towerTopsTimes2"] == [0]


def test_cli_compute_text(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    _, out, _ = run("compute right-trefoil --format text", capsys)
    assert re.search(r"^tau +1$", out, re.M), out


def test_cli_bad_grid(capsys):
    code, out, err = run("compute /no/such/file.grid", capsys)
    assert code == 2
    assert "no/such/file" in err


def test_cli_limit(capsys):
    code, out, _ = run("limit right-trefoil --format json", capsys)
    assert not code
    report = json.loads(out)
    for key in ("minus", "plus"):
        assert report[key]["towerTopGradingTimes2"] == 2
        assert report[key]["torsion"] == [{"order": 1, "topGradingTimes2": 0}]


def test_cli_verify(capsys):
    code, out, _ = run("verify unknot --slopes=-5:-3 --format json --seed 7", capsys)
    assert not code
    report = json.loads(out)
    assert report["passed"]
    assert report["seed"] == 7
    assert report["failures"] == []
    assert report["checks"]["isoSFH"] == {"all": True}


def test_cli_verify_corrupted(capsys):
    code, out, _ = run("verify right-trefoil --slopes=-5:-5 --check stabmaps --corrupt-sigma-plus", capsys)
    assert code == 1


def test_cli_verify_unknown_check(capsys):
    code, _, err = run("verify unknot --check nothing", capsys)
    assert code == 2
    assert "nothing" in err


def test_cli_legendrian(capsys):
    code, out, _ = run("legendrian unknot --format json", capsys)
    assert not code
    report = json.loads(out)
    assert report["rep"]["tb"] == -1
    assert report["placement"]["support"] == ["U"]
    assert report["classification"] == "tight-compatible"


def test_cli_legendrian_overrides(capsys):
    code, out, _ = run("legendrian right-trefoil --tb -1 --r -3 --format json", capsys)
    assert not code
    report = json.loads(out)
    assert report["bounds"]["symmetric"] is False
    assert report["classification"] == "necessarily-overtwisted"


def test_main_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    out, _ = capsys.readouterr()
    assert out.strip()


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
