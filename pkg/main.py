#!/usr/bin/env python3
"""
torarr main entry point
Exact invariants of central toric arrangements
"""

import argparse
import logging
import sys
import time

from torarr.cli import (
    cmd_cohomology,
    cmd_layers,
    cmd_matroid,
    cmd_poset_compare,
    cmd_resonance,
    load_matrix,
    run_reproduction,
)
from torarr.cli.reproduce import CHECKS
from torarr.config import get_settings
from torarr.errors import InputError, TorarrError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def setup_logging(level=logging.INFO, log_file=None):
    """Configure logging; reports own stdout, diagnostics go to stderr"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def add_common_flags(parser, guards=True):
    if guards:
        parser.add_argument('--force', action='store_true',
                            help='Ignore the subset and generator guards')
        parser.add_argument('--max-subsets', type=int, default=None,
                            help='Largest ground set to enumerate (default from settings)')
    parser.add_argument('--format', choices=['text', 'json'], default='text',
                        help='Report format')
    parser.add_argument('--timing', action='store_true',
                        help='Add elapsed time to the report')
    parser.add_argument('--debug', action='store_true',
                        help='Enable debug logging')


def build_parser():
    parser = argparse.ArgumentParser(
        description='torarr - invariants of central toric arrangements',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='Matrices are files ("r n" header, then rows) or names: '
               '@N, @Nprime, @Nsecond, @A, @A(n,a)',
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    matroid_parser = subparsers.add_parser('matroid', help='Rank, multiplicity, Tutte and Poincaré polynomials')
    matroid_parser.add_argument('matrix')
    add_common_flags(matroid_parser)

    layers_parser = subparsers.add_parser('layers', help='Poset of layers')
    layers_parser.add_argument('matrix')
    layers_parser.add_argument('--dot', metavar='PATH', help='Write the Hasse diagram as DOT')
    add_common_flags(layers_parser)

    compare_parser = subparsers.add_parser('compare', help='Compare two posets of layers')
    compare_parser.add_argument('matrix')
    compare_parser.add_argument('other')
    add_common_flags(compare_parser)

    cohom_parser = subparsers.add_parser('cohomology', help='Graded cohomology of the complement')
    cohom_parser.add_argument('matrix')
    cohom_parser.add_argument('--over', choices=['Q', 'Z'], default='Q',
                              help='Coefficients (Z needs a totally unimodular arrangement)')
    cohom_parser.add_argument('--quotient-torus', action='store_true',
                              help='Work in the quotient by the torus classes')
    cohom_parser.add_argument('--mult-rank', nargs=2, type=int, metavar=('P', 'Q'),
                              help='Rank of the product H^p x H^q -> H^(p+q)')
    add_common_flags(cohom_parser)

    resonance_parser = subparsers.add_parser('resonance', help='First resonance variety')
    resonance_parser.add_argument('matrix', nargs='?', default='@A')
    resonance_parser.add_argument('--integral', nargs=2, type=int, metavar=('N', 'A'),
                                  help='Integral sublattices of the covering A_n^a')
    add_common_flags(resonance_parser)

    reproduce_parser = subparsers.add_parser('reproduce', help='Recompute every headline value')
    reproduce_parser.add_argument('--json', action='store_true', help='Same as --format json')
    reproduce_parser.add_argument('--only', action='append', choices=list(CHECKS),
                                  help='Run only this check (repeatable)')
    reproduce_parser.add_argument('--corrupt', choices=list(CHECKS),
                                  help='Perturb one golden value first (the run must fail)')
    add_common_flags(reproduce_parser, guards=False)
    return parser


def run_command(args):
    if args.command == 'reproduce':
        if args.json:
            args.format = 'json'
        return run_reproduction(only=args.only, corrupt=args.corrupt)
    guards = {'max_subsets': args.max_subsets, 'force': args.force}
    if args.command == 'matroid':
        return cmd_matroid(load_matrix(args.matrix), **guards)
    if args.command == 'layers':
        return cmd_layers(load_matrix(args.matrix), dot=args.dot, **guards)
    if args.command == 'compare':
        return cmd_poset_compare(load_matrix(args.matrix), load_matrix(args.other), **guards)
    if args.command == 'cohomology':
        return cmd_cohomology(
            load_matrix(args.matrix), over=args.over,
            quotient_torus=args.quotient_torus, mult_rank=args.mult_rank, **guards,
        )
    if args.command == 'resonance':
        return cmd_resonance(load_matrix(args.matrix), integral=args.integral, **guards)
    raise InputError(f"unknown command {args.command!r}")


def main(argv=None):
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_INPUT_ERROR

    settings = get_settings()
    level = logging.DEBUG if args.debug else getattr(logging, settings.log_level.upper(), logging.INFO)
    setup_logging(level, settings.log_file)
    logger = logging.getLogger(__name__)

    start = time.perf_counter()
    try:
        report = run_command(args)
    except InputError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except TorarrError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return EXIT_CHECK_FAILED

    if args.timing:
        report.timing_ms = (time.perf_counter() - start) * 1000
    print(report.render(args.format))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
