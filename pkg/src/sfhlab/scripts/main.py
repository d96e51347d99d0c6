# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import argparse
import cmd
import logging
import os
import sys
import traceback
from importlib import import_module

import entrypoints
from termcolor import colored

from sfhlab.exceptions import InvariantError
from sfhlab.exceptions import VerificationFailure

from .compute import ComputeCmd
from .legendrian import LegendrianCmd
from .settings import SettingsCmd
from .verify import VerifyCmd

LOG = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

HISTORY_FILE = os.path.expanduser("~/.sfhlab-history")
HISTORY_LENGTH = 1000


class History:
    """Interactive history, a no-op where ``readline`` is missing (win32)."""

    def __init__(self, path=HISTORY_FILE):
        self.path = path
        try:
            import readline
        except ImportError:
            readline = None
        self.readline = readline

    def load(self):
        if self.readline is None or not os.path.exists(self.path):
            return
        try:
            self.readline.read_history_file(self.path)
        except OSError:
            LOG.debug("Cannot read %s", self.path, exc_info=True)

    def save(self):
        if self.readline is None:
            return
        try:
            self.readline.set_history_length(HISTORY_LENGTH)
            self.readline.write_history_file(self.path)
        except OSError:
            LOG.debug("Cannot write %s", self.path, exc_info=True)


def get_plugins():
    seen = []
    for entry in entrypoints.get_group_all("sfhlab.scripts"):
        klass = getattr(import_module(entry.module_name), entry.object_name)
        if klass in seen:
            LOG.error("Plugin %s.%s registered twice, ignored", entry.module_name, entry.object_name)
            continue
        seen.append(klass)
    return seen


def command_name(line):
    """``settings-reset x`` -> ``settings_reset x``; only the first word changes."""
    head, _, rest = line.strip().partition(" ")
    return " ".join(filter(None, [head.replace("-", "_"), rest]))


class SfhLabApp(
    cmd.Cmd,
    SettingsCmd,
    ComputeCmd,
    VerifyCmd,
    LegendrianCmd,
    *get_plugins(),
):
    prompt = colored("(sfhlab) ", "yellow")

    history = History()

    def preloop(self):
        self.history.load()

    def postloop(self):
        self.history.save()

    def emptyline(self):
        pass

    def do_quit(self, args):
        """Quit sfhlab."""
        return True

    def default(self, line):
        if line == "EOF":
            return True
        name = colored(line.split()[0], "yellow")
        print(f"Unknown command {name}. Type {colored('help', 'yellow')} for the list of known command names.")
        return EXIT_INPUT_ERROR

    def onecmd(self, line):
        try:
            return super().onecmd(command_name(line))
        except (ValueError, KeyError, OSError) as e:
            LOG.debug("Input error", exc_info=True)
            print(colored(str(e), "red"), file=sys.stderr)
            return EXIT_INPUT_ERROR
        except (VerificationFailure, InvariantError) as e:
            traceback.print_exc()
            print(colored(str(e), "red"), file=sys.stderr)
            return EXIT_FAILURE


def _parser():
    p = argparse.ArgumentParser(prog="sfhlab", add_help=False)
    p.add_argument("--debug", action="store_true", help="log at DEBUG level (default: WARNING)")
    p.add_argument("-h", "--help", action="store_true", help="list the commands and exit")
    p.add_argument("-v", "--version", action="store_true", help="print the version and exit")
    p.add_argument("cmdline", metavar="CMD", nargs=argparse.REMAINDER)
    return p


def main(argv=None):
    args = _parser().parse_args(argv)

    if args.version:
        from sfhlab import __version__

        print(__version__)
        sys.exit()

    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING)

    app = SfhLabApp()
    words = ["help"] if args.help else args.cmdline
    if not words:
        app.cmdloop()
        return

    status = app.onecmd(" ".join(words))
    if status:
        sys.exit(status)


def command_list():
    return sorted(
        name[3:]
        for name in dir(SfhLabApp)
        if name.startswith("do_")
        and callable(getattr(SfhLabApp, name))
        and getattr(SfhLabApp, name).__module__.startswith("sfhlab.")
    )


if __name__ == "__main__":
    main()
