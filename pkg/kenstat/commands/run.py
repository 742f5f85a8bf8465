# -*- coding: utf-8 -*-

from __future__ import absolute_import

import argparse
import logging

from kenstat.commands.base import Command
from kenstat.config import FORMATS, SUITES, load_config, parse_tier
from kenstat.exceptions import CommandError
from kenstat.report import emit_report, format_summary, write_report
from kenstat.suites import run_suite
from kenstat.utils.compatibility import safe_print


SUITE_FAILED = 2

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises CommandError instead of exiting"""

    def error(self, message):
        raise CommandError('run: {}'.format(message))


def build_parser():
    parser = ArgumentParser(prog='kenstat run', description='Run a verification suite.')
    parser.add_argument('--config', help='JSON config file; flags override its settings')
    parser.add_argument('--suite', choices=SUITES)
    parser.add_argument('--manifold', help='catalog manifold, e.g. "example_3_4(lam=1, beta=1)"')
    parser.add_argument('--immersion', help='catalog immersion, e.g. fiber_slice')
    parser.add_argument('--points', type=int, help='sample points per target')
    parser.add_argument('--directions', type=int, help='unit directions per point for the inequality sweep')
    parser.add_argument('--seed', type=int)
    parser.add_argument(
        '--tol-tier', action='append', default=[], metavar='TIER=VALUE',
        help='override one tolerance tier; repeatable',
    )
    parser.add_argument('--format', choices=FORMATS)
    parser.add_argument('--out', help='write the report to this path instead of stdout')
    parser.add_argument('--jobs', type=int, help='worker threads for per-sample checks')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


class RunCommand(Command):
    def parse(self, args):
        options = build_parser().parse_args(args)
        tiers = {}
        for text in options.tol_tier:
            tiers.update(parse_tier(text))
        flags = {
            'suite': options.suite,
            'manifold': options.manifold,
            'immersion': options.immersion,
            'points': options.points,
            'directions': options.directions,
            'seed': options.seed,
            'tolerances': tiers,
            'format': options.format,
            'output': options.out,
            'jobs': options.jobs,
        }
        return options, load_config(options.config, flags)

    def run(self, args=None):
        args = self.get_command_attributes() if args is None else args
        options, cfg = self.parse(args)
        logging.basicConfig(
            level=LOG_LEVELS[min(options.verbose, len(LOG_LEVELS) - 1)],
            format='%(levelname)s %(name)s: %(message)s',
        )

        result = run_suite(cfg)

        if cfg.output:
            write_report(result, cfg.output, cfg.format)
            safe_print(format_summary(result, color=True))
        elif cfg.format == 'json':
            safe_print(emit_report(result, 'json').decode('utf-8').rstrip('\n'))
        else:
            safe_print(emit_report(result, 'text', color=True).decode('utf-8').rstrip('\n'))

        if not result.ok:
            self.print_error('{} check(s) failed'.format(result.summary['failed']))
            return SUITE_FAILED
        return 0


Run = RunCommand()
