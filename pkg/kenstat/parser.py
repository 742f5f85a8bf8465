from __future__ import absolute_import

from kenstat.exceptions import CommandError
from kenstat.commands import commands_dict
from kenstat.utils.compatibility import safe_print
from kenstat.utils.styles import Fore, Style


class Parser:
    def print_help(self):
        safe_print(
            '{fail}usage: {blue}{prog} {green}<command>{reset} [options]\n\n'
            '  {green}run{reset}        run a verification suite (see {prog} run --help)\n'
            '  {green}list{reset}, {green}ls{reset}   list the catalog of manifolds and immersions'
            .format(
                prog='kenstat',
                fail=Fore.FAIL,
                blue=Fore.BLUE,
                green=Fore.GREEN,
                reset=Style.RESET_ALL,
            )
        )

    def parseopts(self, args):
        """
        Splits the command name from its arguments

        Returns:
            tuple: (command name, remaining arguments), or (None, []) after
            printing the usage when no command is given
        """
        try:
            cmd_name = args[0]
            cmd_args = args[1:]
        except IndexError:
            self.print_help()
            return None, []

        if cmd_name not in commands_dict:
            msg = '{fail}unknown command {blue}{cmd}{reset}'.format(
                    cmd=cmd_name,
                    fail=Fore.FAIL,
                    blue=Fore.BLUE,
                    reset=Style.RESET_ALL,
                )
            raise CommandError(msg)

        return cmd_name, cmd_args
