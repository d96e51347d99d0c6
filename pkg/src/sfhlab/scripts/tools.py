# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import argparse
import functools
import random
import shlex
import textwrap
from itertools import cycle

import numpy as np
from termcolor import colored

from sfhlab.core.settings import SETTINGS
from sfhlab.utils.serialise import dumps


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as ``ValueError`` instead of exiting."""

    def error(self, message):
        raise ValueError(f"{self.prog}: {message}\n\n{self.format_help()}")


def _add_option(parser, name, definition):
    # dict -> --name; (flags..., dict) -> positional or extra flags, None stands for name
    if isinstance(definition, dict):
        parser.add_argument(f"--{name}", **definition)
        return
    *flags, options = definition
    flags = [name if f is None else f for f in flags] or [name]
    if flags[0] != name and flags[0] != f"--{name}":
        flags.insert(0, f"--{name}")
    parser.add_argument(*flags, **options)


def parse_args(epilog="", **options):
    """Give a ``do_*`` method an argparse parser built from ``options``."""

    def wrapper(func):
        parser = ArgumentParser(
            func.__name__[len("do_") :],
            description=textwrap.dedent(func.__doc__ or ""),
            epilog=textwrap.dedent(epilog),
            add_help=False,
        )
        # argparse's own help would exit the interpreter loop
        parser.add_argument("-h", "--help", action="store_true", help="show this help and return")
        for name, definition in options.items():
            _add_option(parser, name.replace("_", "-"), definition)
        func._argparser = parser

        @functools.wraps(func)
        def wrapped(self, line):
            args = parser.parse_args(shlex.split(line))
            if args.help:
                parser.print_help()
                return None
            return func(self, args)

        return wrapped

    return wrapper


def parse_slopes(text):
    """``"A:B"`` to the inclusive list of slopes between A and B."""
    try:
        low, high = (int(x) for x in text.split(":"))
    except ValueError:
        raise ValueError(f"Slopes must look like A:B, got {text!r}") from None
    low, high = sorted((low, high))
    return list(range(low, high + 1))


FORMAT = dict(choices=["json", "text"], default=None, help="output format (default: the output-format setting)")
DEPTH = dict(type=int, default=None, help="depth of the direct system (default: the default-depth setting)")
JOBS = dict(type=int, default=None, help="worker threads (default: the number-of-jobs setting)")
SEED = dict(type=int, default=None, help="random seed (default: the random-seed setting)")


def output_format(args):
    return args.format or SETTINGS.get("output-format")


def depth(args):
    value = args.depth if args.depth is not None else SETTINGS.get("default-depth")
    return value or None


def jobs(args):
    return args.jobs if args.jobs is not None else SETTINGS.get("number-of-jobs")


def seed(args):
    value = args.seed if args.seed is not None else SETTINGS.get("random-seed")
    random.seed(value)
    np.random.seed(value % 2**32)
    return value


def print_table(rows, colours=("blue",)):
    rows = list(rows)
    if not rows:
        return
    width = max(len(str(key)) for key, _ in rows)
    for (key, value), colour in zip(rows, cycle(colours)):
        print(f"{str(key):<{width}} {colored(str(value), colour)}")


def emit(report, fmt):
    if fmt == "json":
        print(dumps(report))
        return
    print_table(_flatten(report))


def _flatten(data, prefix=""):
    if isinstance(data, dict):
        for k in sorted(data, key=str):
            yield from _flatten(data[k], f"{prefix}{k}.")
        return
    yield prefix.rstrip("."), data
