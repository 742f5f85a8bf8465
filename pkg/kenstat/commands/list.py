# -*- coding: utf-8 -*-

from __future__ import absolute_import

from kenstat.catalog import IMMERSIONS, catalog, dimension_of
from kenstat.commands.base import Command
from kenstat.utils.compatibility import safe_print
from kenstat.utils.styles import Fore, Style, colored


def format_entry(entry, color=False):
    """One catalog line: name, anchor, kind, dimension and default parameters"""
    kind = 'immersion' if entry.name in IMMERSIONS else 'manifold'
    params = ', '.join('{}={!r}'.format(key, value) for key, value in entry.defaults.items()) or '-'
    if color:
        head = '{} — {}'.format(colored(entry.name, Style.BOLD, Fore.BLUE), colored(entry.anchor, Fore.GREEN))
    else:
        head = '{} — {}'.format(entry.name, entry.anchor)
    return '{head}\n    {kind}, dim {dims}; params: {params}\n    {description}'.format(
        head=head,
        kind=kind,
        dims=dimension_of(entry),
        params=params,
        description=entry.description,
    )


def list_catalog(color=False):
    """Every catalog entry, manifolds first, in registration order"""
    return '\n'.join(format_entry(entry, color) for entry in catalog())


class ListCommand(Command):
    def run(self, args=None):
        args = self.get_command_attributes() if args is None else args
        if args:
            self.print_warning('list takes no arguments; ignoring {}'.format(' '.join(args)))
        safe_print(list_catalog(color=True))
        return 0


List = ListCommand()
