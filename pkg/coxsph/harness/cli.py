# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         harness/cli.py
# Purpose:      the coxsph command line
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
The ``coxsph`` command::

    coxsph census A4
    coxsph census A6 --slow --processes 4 --json s7.json
    coxsph check A4 24531
    coxsph check E8 "2 3 4 2 3 4 5 4 2 3 1 4 5 7 8 7 6 7 8" --I 2,3,4,5,7,8
    coxsph key-expand "(1,5,2,4,3)" --D 2,4 --cross-check
    coxsph verify-consistency --n 5
    coxsph verify-consistency --n 6 --slow
    coxsph experiment upone --seed 7

Exit codes: 0 on success, 1 for usage and input errors, 2 when a result
disagrees with a known value or a cross-check.
"""
import sys
import json
import logging
import argparse

from .. import __version__
from .. import config
from .. import report as reporting
from ..coxeter import CoxeterError, EnumerationCapError, buildSystem
from ..notation import NotationError, parseComposition, parseNodeSet
from ..polyring import PolynomialError
from ..spherical import SphericalQueryError
from ..splitrule import SplitRuleError, DescentOutsideSplitError
from ..typea import PermutationError
from ..words import WordError
from .census import runCensus
from .check import checkElement
from .consistency import verifyConsistency
from .expansion import ORACLES, expandKey
from .experiments import EXPERIMENTS, ExperimentError, runExperiment

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

USAGE_ERRORS = (NotationError, CoxeterError, WordError, PermutationError,
                SphericalQueryError, DescentOutsideSplitError, PolynomialError,
                ExperimentError, config.ConfigError)

class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that exits with the usage exit code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')

def buildParser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help='log debug messages')
    common.add_argument('-q', '--quiet', action='store_true', help='only log warnings and errors')
    common.add_argument('--config', metavar='FILE', help='YAML file merged over the defaults')
    common.add_argument('--json', metavar='FILE', help='write the result as JSON')
    common.add_argument('--html', metavar='FILE', help='write the result as an HTML report')
    common.add_argument('--progress', action='store_true', help='show progress bars')
    common.add_argument('--processes', type=int, default=None,
                        help='worker processes (default: configuration)')
    paranoid = ArgumentParser(add_help=False)
    paranoid.add_argument('--paranoid', action='store_true',
                          help='cross-check every result with independent methods')

    parser = ArgumentParser(prog='coxsph',
                            description='Sphericality of elements of finite Coxeter groups')
    parser.add_argument('--version', action='version', version=f'coxsph {__version__}')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    census = commands.add_parser('census', parents=[common, paranoid],
                                 help='decide maximal sphericality for a whole group')
    census.add_argument('type', help='Cartan type, e.g. A4, B3, D4, F4, I2(5)')
    census.add_argument('--slow', action='store_true', help='allow large groups')

    check = commands.add_parser('check', parents=[common, paranoid],
                                help='decide I-sphericality of one element')
    check.add_argument('type', help='Cartan type')
    check.add_argument('element', help='a word such as "s2 s1 s3" or, in type A, a permutation')
    check.add_argument('--I', dest='nodes', metavar='NODES', default=None,
                       help='comma-separated node set, default J(w)')

    expand = commands.add_parser('key-expand', parents=[common, paranoid],
                                 help='expand a key polynomial in the D-Schur basis')
    expand.add_argument('composition', help='weak composition, e.g. "(1,5,2,4,3)"')
    expand.add_argument('--D', dest='split', metavar='POSITIONS', default='',
                        help='comma-separated split positions')
    expand.add_argument('--oracle', choices=ORACLES, default='peel')
    expand.add_argument('--cross-check', dest='crossCheck', action='store_true',
                        help='compare with the other oracle')

    consistency = commands.add_parser('verify-consistency', parents=[common],
                                      help='witness search against staircase keys in S_n')
    consistency.add_argument('--n', type=int, required=True)
    consistency.add_argument('--slow', action='store_true', help='allow large n')

    experiment = commands.add_parser('experiment', parents=[common],
                                     help='run an experiment')
    experiment.add_argument('name', choices=sorted(EXPERIMENTS))
    experiment.add_argument('--n', type=int, default=None)
    experiment.add_argument('--seed', type=int, default=None)
    return parser

def configureLogging(args) -> None:
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)

def _processes(args, settings, order: int) -> int:
    if args.processes is not None:
        return args.processes
    if order <= settings.get('shardSize', 256):
        return 1
    return settings.get('processes')

def cmdCensus(args, settings):
    system = buildSystem(args.type)
    order = system.groupOrder()
    if order > settings['slowCensusOrder'] and not args.slow:
        raise SlowRunError(
            f'{system.cartanType} has {order} elements; pass --slow to run this census')
    result = runCensus(system.cartanType, _processes(args, settings, order), args.progress,
                       paranoid=args.paranoid)
    return 'census', result, result.agrees

def cmdCheck(args, settings):
    nodes = None if args.nodes is None else parseNodeSet(args.nodes)
    result = checkElement(args.type, args.element, nodes, paranoid=args.paranoid)
    return 'check', result, result.agrees

def cmdKeyExpand(args, settings):
    alpha = parseComposition(args.composition)
    result = expandKey(alpha, parseNodeSet(args.split), oracle=args.oracle,
                       crossCheck=args.crossCheck, paranoid=args.paranoid)
    return 'expansion', result, result.agrees

def cmdVerifyConsistency(args, settings):
    if args.n > settings['slowConsistencyN'] and not args.slow:
        raise SlowRunError(f'verify-consistency with n = {args.n} is slow; pass --slow to run it')
    result = verifyConsistency(args.n, showProgress=args.progress)
    return 'consistency', result, result.agrees

def cmdExperiment(args, settings):
    result = runExperiment(args.name, n=args.n, seed=args.seed)
    return 'experiment', result, result.supported

COMMANDS = {
    'census': cmdCensus,
    'check': cmdCheck,
    'key-expand': cmdKeyExpand,
    'verify-consistency': cmdVerifyConsistency,
    'experiment': cmdExperiment
}

class SlowRunError(Exception):
    """Raised when a census or a consistency sweep needs --slow"""
    pass

def main(argv=None) -> int:
    """Run the command line and return the exit code"""
    args = buildParser().parse_args(argv)
    configureLogging(args)

    try:
        if args.config is not None:
            config.setSettings(config.load(args.config))
        settings = config.getSettings()
        kind, result, ok = COMMANDS[args.command](args, settings)
    except (EnumerationCapError, SplitRuleError) as error:
        logger.error('%s', error)
        return EXIT_FAILURE
    except USAGE_ERRORS + (SlowRunError,) as error:
        logger.error('%s', error)
        return EXIT_USAGE

    print(reporting.toText(kind, result))
    if args.json is not None:
        with open(args.json, 'w') as handle:
            json.dump(result.toObject(), handle, indent=2)
    if args.html is not None:
        reporting.toFile(kind, result, filepath=args.html, html=True)

    if not ok:
        logger.warning('%s: the result disagrees with a known value or a cross-check', args.command)
        return EXIT_FAILURE
    return EXIT_OK

if __name__ == '__main__':
    sys.exit(main())
