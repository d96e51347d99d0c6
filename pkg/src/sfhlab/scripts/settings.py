# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import json

from termcolor import colored

from .tools import parse_args
from .tools import print_table


def _names(prefix=""):
    from sfhlab import settings

    return [name for name, *_ in settings.dump() if name.startswith(prefix)]


class SettingsCmd:
    @parse_args(
        args=(None, dict(metavar="SETTING", type=str, nargs="*")),
        json=dict(action="store_true", help="produce a JSON output"),
    )
    def do_settings(self, args):
        """
        Display or change sfhlab settings.

        Examples: sfhlab settings number-of-jobs 4
                  sfhlab settings grid-directories /data/grids ~/grids
        """
        from sfhlab import settings

        if not args.args:
            values = {name: value for name, value, _ in settings.dump()}
            if args.json:
                print(json.dumps(values, indent=4, sort_keys=True))
            else:
                print_table(values.items())
            return

        name, *values = args.args
        if values:
            settings.set(name, *values)
        else:
            print(settings.get(name))

    def complete_settings(self, text, line, start_index, end_index):
        return _names(text)

    complete_settings_reset = complete_settings

    @parse_args(
        all=dict(action="store_true", help="reset every setting"),
        args=("args", dict(metavar="SETTING", type=str, nargs="*")),
    )
    def do_settings_reset(self, args):
        """Reset sfhlab settings to their defaults."""
        from sfhlab import settings

        if args.args:
            for name in args.args:
                settings.reset(name)
        elif args.all:
            settings.reset()
        else:
            print(colored("Name the settings to reset, or use --all.", "red"))
