#!/usr/bin/env python3
# coding: utf-8

from __future__ import absolute_import

import sys

__version__ = '0.1.0'

MINIMUM_PYTHON = (3, 7)


def check_python_version():
    if sys.version_info[:2] < MINIMUM_PYTHON:
        from kenstat.utils.compatibility import safe_print
        from kenstat.utils.styles import Fore, Style
        safe_print(
'''
{fail}{bold}\tUh oh!{reset}
{warning}kenstat needs Python {major}.{minor} or newer.
{info}Download Python: {blue}https://www.python.org/downloads{reset}
'''
            .format(
                major=MINIMUM_PYTHON[0],
                minor=MINIMUM_PYTHON[1],
                fail=Fore.FAIL,
                bold=Style.BOLD,
                warning=Fore.WARNING,
                info=Fore.INFO,
                blue=Fore.BLUE,
                reset=Style.RESET_ALL,
            )
        )
        sys.exit(1)


def main(args=None):
    """
    Command-line entry point

    Returns 0 on success, 1 on usage, configuration or geometry errors and
    2 when a finished suite has failed checks.
    """
    check_python_version()

    from kenstat.commands import commands_dict
    from kenstat.exceptions import KenstatError
    from kenstat.parser import Parser
    from kenstat.utils.styles import Fore, Style

    parser = Parser()

    if args is None:
        args = sys.argv[1:]

    try:
        cmd_name, cmd_args = parser.parseopts(args)
        if cmd_name is None:
            return 0
        return commands_dict[cmd_name](cmd_args)
    except KenstatError as err:
        sys.stderr.write('{fail}{err}{reset}\n'.format(fail=Fore.FAIL, err=err, reset=Style.RESET_ALL))
        return 1


if __name__ == '__main__':
    sys.exit(main())
