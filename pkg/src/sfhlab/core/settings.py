# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import functools
import logging
import os
from contextlib import contextmanager
from typing import Callable

import yaml

from sfhlab._version import __version__ as VERSION

LOG = logging.getLogger(__name__)

DOT_SFHLAB = os.path.expanduser("~/.sfhlab")

OUTPUT_FORMATS = ("json", "text")

TRUE_WORDS = ("1", "true", "yes", "on")


def at_least(low):
    def check(name, value):
        value = int(value)
        if value < low:
            raise ValueError(f"Setting '{name}' must be >= {low}, got {value}")
        return value

    return check


def one_of(*choices):
    def check(name, value):
        if value not in choices:
            raise ValueError(f"Setting '{name}' must be one of {choices}, got {value!r}")
        return value

    return check


def _comment(text):
    return "".join(f"# {line.strip()}\n" if line.strip() else "#\n" for line in text.rstrip().split("\n"))


class Setting:
    def __init__(self, default, description, check=None, kind=None):
        self.default = default
        self.description = description
        self.check = check
        self.kind = type(default) if kind is None else kind

    def convert(self, name, args):
        """Turn the arguments of ``set`` into a value of the right kind."""
        if self.kind is list:
            if not args:
                raise TypeError(f"Setting '{name}' takes at least one value")
            if len(args) == 1 and isinstance(args[0], list):
                return list(args[0])
            return list(args)

        if len(args) != 1:
            raise TypeError(f"Setting '{name}' takes exactly one value")
        (value,) = args
        if self.kind is bool and isinstance(value, str):
            return value.lower() in TRUE_WORDS
        return self.kind(value)

    def validate(self, name, value):
        return value if self.check is None else self.check(name, value)

    def to_yaml(self, name, value):
        """Commented block for the settings file; the default is shown as a comment."""
        text = _comment(self.description) + "\n"
        text += _comment(yaml.dump({name: self.default}, default_flow_style=False))
        if value != self.default:
            text += "\n" + yaml.dump({name: value}, default_flow_style=False)
        return text


SETTINGS_AND_HELP = {
    "default-depth": Setting(
        0,
        """Depth of the direct system when ``--depth`` is not given.
        Zero means 2g + 4, the smallest depth accepted for the knot.""",
        check=at_least(0),
    ),
    "number-of-jobs": Setting(
        1,
        "Number of threads used for per-slope verification.",
        check=at_least(1),
    ),
    "random-seed": Setting(
        20140611,
        "Seed of the randomised checks of ``sfhlab verify``.",
    ),
    "slope-margin": Setting(
        7,
        """How far the default slopes of ``sfhlab verify`` reach below the
        first slope that has a tile complex (-2g-3 for genus 0 and 1).""",
        check=at_least(0),
    ),
    "output-format": Setting(
        "json",
        "Default report format, ``json`` or ``text``.",
        check=one_of(*OUTPUT_FORMATS),
    ),
    "grid-directories": Setting(
        [os.path.join(DOT_SFHLAB, "grids")],
        """List of directories where to search for ``<name>.grid`` files,
        after the grids shipped with the package.""",
    ),
    "progress-bars": Setting(
        False,
        "Show progress bars during long computations.",
    ),
}

DEFAULTS = {name: s.default for name, s in SETTINGS_AND_HELP.items()}


def _setting(name):
    try:
        return SETTINGS_AND_HELP[name]
    except KeyError:
        raise KeyError(f"No setting name '{name}'") from None


def write_settings(path, values):
    LOG.debug("Saving settings to %s", path)
    rule = "# " + "-" * 76 + "\n"
    blocks = [rule + SETTINGS_AND_HELP[k].to_yaml(k, v) for k, v in sorted(values.items()) if k in SETTINGS_AND_HELP]
    blocks.append(rule + "# Version of sfhlab\n\n" + yaml.dump({"version": VERSION}, default_flow_style=False))
    with open(path, "w") as f:
        f.write("# This file is automatically generated\n\n")
        f.write("\n".join(blocks))


def read_settings(path):
    """Values from ``path`` over the defaults, and whether the file needs rewriting."""
    values = dict(DEFAULTS)
    try:
        with open(path) as f:
            loaded = yaml.safe_load(f)
    except Exception:
        LOG.error("Cannot load sfhlab settings (%s), reverting to defaults", path, exc_info=True)
        return values, True

    if not isinstance(loaded, dict):
        loaded = {}
    stale = loaded.pop("version", None) != VERSION
    values.update(loaded)
    return values, stale


def _delegated(method):
    # Inside ``temporary()`` calls go to the innermost copy
    @functools.wraps(method)
    def wrapped(self, *args, **kwargs):
        target = self._stack[-1] if self._stack else self
        return method(target, *args, **kwargs)

    return wrapped


class Settings:
    def __init__(self, path, values, callbacks=()):
        self._path = path
        self._values = dict(values)
        self._callbacks = list(callbacks)
        self._stack = []

    @_delegated
    def get(self, name: str, default=None):
        """Value of a setting, validated by the setting's check."""
        setting = _setting(name)
        return setting.validate(name, self._values.get(name, default))

    @_delegated
    def set(self, name: str, *args, **kwargs):
        setting = _setting(name)
        if kwargs:
            raise TypeError(f"Setting '{name}' does not take keyword arguments")
        value = setting.validate(name, setting.convert(name, args))
        self._values[name] = value
        self._changed()

    @_delegated
    def reset(self, name: str = None):
        """Reset one setting, or all of them when ``name`` is ``None``."""
        if name is None:
            self._values = dict(DEFAULTS)
        else:
            _setting(name)
            self._values[name] = DEFAULTS[name]
        self._changed()

    @_delegated
    def dump(self):
        for name, value in sorted(self._values.items()):
            yield name, value, SETTINGS_AND_HELP.get(name)

    def on_change(self, callback: Callable[[], None]):
        self._callbacks.append(callback)

    @_delegated
    def temporary(self, name=None, *args, **kwargs):
        """Context manager working on an unsaved copy of the settings."""
        copy = Settings(None, self._values, self._callbacks)
        if name is not None:
            copy.set(name, *args, **kwargs)
        return _pushed(copy)

    def _changed(self):
        self._save()
        self._notify()

    def _notify(self):
        for callback in self._callbacks:
            callback()

    def _save(self):
        if self._path is None:
            return
        try:
            write_settings(self._path, self._values)
        except Exception:
            LOG.error("Cannot save sfhlab settings (%s)", self._path, exc_info=True)


@contextmanager
def _pushed(copy):
    SETTINGS._stack.append(copy)
    SETTINGS._notify()
    try:
        yield None
    finally:
        SETTINGS._stack.pop()
        SETTINGS._notify()


def _initialise():
    path = os.path.join(DOT_SFHLAB, "settings.yaml")
    try:
        os.makedirs(DOT_SFHLAB, mode=0o700, exist_ok=True)
        if not os.path.exists(path):
            write_settings(path, DEFAULTS)
    except Exception:
        LOG.error("Cannot create sfhlab settings directory, using defaults (%s)", path, exc_info=True)

    values, stale = read_settings(path)
    settings = Settings(path, values)
    if stale:
        settings._save()
    return settings


SETTINGS = _initialise()
