# -*- coding: utf-8 -*-

from __future__ import absolute_import

import sys

from kenstat.utils.compatibility import safe_print
from kenstat.utils.styles import Fore, colored


class Command(object):
    """
    Base class for all CLI commands

    Subclasses implement `run(args)` and return the process exit status.
    When `args` is None the arguments after the command name are read
    from sys.argv.
    """

    STATUS_COLORS = {
        'success': Fore.GREEN,
        'error': Fore.FAIL,
        'info': Fore.INFO,
        'warning': Fore.WARNING,
    }

    def run(self, args=None):
        """
        Executes the command

        Raises:
            NotImplementedError: If subclass doesn't implement this method
        """
        raise NotImplementedError

    def get_command_attributes(self):
        """
        Arguments after the command name

        Example:
            Command typed: kenstat run --suite axioms
            sys.argv: ['kenstat', 'run', '--suite', 'axioms']
            Returns: ['--suite', 'axioms']
        """
        return sys.argv[2:]

    def format_status_message(self, status, message):
        """Wraps a message in the colour of its status"""
        return colored(message, self.STATUS_COLORS.get(status, ''))

    def print_error(self, message):
        safe_print(self.format_status_message('error', message))

    def print_warning(self, message):
        safe_print(self.format_status_message('warning', message))
