"""The ``rubancf`` command line tool.

All output is JSON on standard output, diagnostics go to standard error. The
exit code is 0 on success, 2 if the input is invalid, and 3 if a budget or
precision limit was exceeded.
"""
import argparse
from fractions import Fraction
import json
import logging
from random import Random
import sys
from typing import Any, Dict, List, Optional

from rubancf.classify import classify_rational, classify_surd
from rubancf.document import (
        CFDocument, criterion_report_to_dict, dumps, height_report_to_dict,
        load_periodic_spec, load_quasi_periodic_spec, periodic_spec_to_dict,
        rational_verdict_to_dict, surd_verdict_to_dict)
from rubancf.errors import (
        BudgetExceeded, PrecisionOverflow, PreconditionError, RubanError)
from rubancf.factory import make_branch, make_criterion, make_example, make_expansion
from rubancf.heights import RationalValue, bound_report, random_periodic_spec
from rubancf.quasi_periodic import QuasiPeriodicSpec
from rubancf.settings import Settings


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('invalid fraction {!r}'.format(text))


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--prime', '-p', type=int, required=True,
                        help='the prime p')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--rational', type=_fraction,
                        help='rational number to expand, e.g. 1/2')
    source.add_argument('--sqrt', type=int, metavar='D',
                        help='integer whose square root to expand')
    parser.add_argument('--branch', choices=['a', 'b'], default='a',
                        help='which square root of D to use')


def make_parser() -> argparse.ArgumentParser:
    """Create the argument parser of the command line tool."""
    parser = argparse.ArgumentParser(
            prog='rubancf',
            description='Ruban p-adic continued fractions with exact arithmetic.')
    parser.add_argument('--verbose', '-v', action='count', default=0,
                        help='log progress to standard error, twice for details')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    expand = commands.add_parser('expand', help='expand a number')
    _add_source(expand)
    expand.add_argument('--depth', type=int,
                        help='number of partial quotients or rational step budget')
    expand.add_argument('--json', action='store_true',
                        help='output JSON (always on)')
    expand.add_argument('--convergents', action='store_true',
                        help='include the convergents r_n, q_n')

    classify = commands.add_parser(
            'classify', help='decide whether an expansion is periodic')
    _add_source(classify)
    classify.add_argument('--budget', type=int, help='number of steps to take')

    height = commands.add_parser(
            'height', help='heights of periodic continued fractions')
    height.add_argument('--prime', '-p', type=int,
                        help='the prime, must match the spec if both are given')
    spec_or_sweep = height.add_mutually_exclusive_group(required=True)
    spec_or_sweep.add_argument('--spec', metavar='FILE',
                               help='JSON file with a periodic continued fraction')
    spec_or_sweep.add_argument('--sweep', type=int, metavar='N',
                               help='check N random continued fractions')
    height.add_argument('--seed', type=int, default=0,
                        help='random seed for --sweep')

    criterion = commands.add_parser(
            'criterion', help='check a transcendence criterion')
    criterion.add_argument('--theorem', required=True,
                           choices=['1', '2', '3', '1.1', '4.2', '4.3'])
    example_or_spec = criterion.add_mutually_exclusive_group(required=True)
    example_or_spec.add_argument('--example', type=int, choices=[1, 2])
    example_or_spec.add_argument('--spec', metavar='FILE',
                                 help='JSON file with a quasi-periodic spec')
    criterion.add_argument('--prime', '-p', type=int, help='prime for --example')
    criterion.add_argument('--A', type=_fraction, dest='A',
                           help='bound on |a_i|_p, defaults to the largest one')
    criterion.add_argument('--depth', type=int,
                           help='number of quotients to inspect')
    return parser


def _load_json(path: str) -> Dict[str, Any]:
    with open(path, 'r') as f:
        return json.load(f)


def _expand(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    expansion = make_expansion(
            args.prime, rational=args.rational, sqrt=args.sqrt,
            branch=args.branch, depth=args.depth, settings=settings)
    return CFDocument.from_expansion(expansion, args.convergents).to_dict()


def _classify(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    if args.rational is not None:
        return rational_verdict_to_dict(
                classify_rational(args.rational, args.prime, args.budget, settings))
    verdict = classify_surd(args.sqrt, args.prime, make_branch(args.branch),
                            args.budget, settings)
    return surd_verdict_to_dict(verdict)


def _height(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    if args.spec is not None:
        spec = load_periodic_spec(_load_json(args.spec))
        if args.prime is not None and args.prime != spec.p:
            raise ValueError('--prime {} does not match the spec prime {}'.format(
                args.prime, spec.p))
        return height_report_to_dict(bound_report(spec, settings))

    p = 5 if args.prime is None else args.prime
    rng = Random(args.seed)
    rational = 0
    failures = []   # type: List[Dict[str, Any]]
    for _ in range(args.sweep):
        spec = random_periodic_spec(p, rng)
        report = bound_report(spec, settings)
        if isinstance(report.value, RationalValue):
            rational += 1
        if not report.all_hold:
            failures.append(periodic_spec_to_dict(spec))
    return {
            'p': p, 'seed': args.seed, 'count': args.sweep,
            'rational': rational, 'quadratic': args.sweep - rational,
            'all_hold': not failures, 'failures': failures}


def _largest_quotient(spec: QuasiPeriodicSpec) -> Fraction:
    values = spec.quotient_values() + spec.prefix[:1]
    return max([Fraction(spec.p)] + [q.abs_value() for q in values])


def _criterion(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    if args.example is not None:
        if args.prime is None:
            raise ValueError('--example needs --prime')
        spec = make_example(args.example, args.prime)
    else:
        spec = load_quasi_periodic_spec(_load_json(args.spec))
    criterion = make_criterion(args.theorem)
    A = args.A
    if A is None and criterion.needs_A:
        A = _largest_quotient(spec)
    if A is not None and A.denominator == 1:
        A = int(A)
    report = criterion.check(spec, A, args.depth, settings)
    return criterion_report_to_dict(report)


_COMMANDS = {
        'expand': _expand,
        'classify': _classify,
        'height': _height,
        'criterion': _criterion}


def _setup_logging(verbosity: int) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger('rubancf')
    root.addHandler(handler)
    if verbosity >= 2:
        root.setLevel(logging.DEBUG)
    elif verbosity == 1:
        root.setLevel(logging.INFO)
    else:
        root.setLevel(logging.WARNING)
    return handler


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line tool.

    Args:
        argv: The arguments, defaults to sys.argv[1:].

    Returns:
        The exit code.
    """
    args = make_parser().parse_args(argv)
    handler = _setup_logging(args.verbose)

    try:
        settings = Settings.from_environment()
        logger.debug('Running %s with %s', args.command, vars(args))
        result = _COMMANDS[args.command](args, settings)
    except (BudgetExceeded, PrecisionOverflow) as e:
        print('rubancf: {}'.format(e), file=sys.stderr)
        return EXIT_EXHAUSTED
    except PreconditionError as e:
        print('rubancf: {}: {}'.format(type(e).__name__, e), file=sys.stderr)
        return EXIT_INVALID
    except (RubanError, ValueError, KeyError, TypeError, OSError) as e:
        print('rubancf: {}'.format(e), file=sys.stderr)
        return EXIT_INVALID
    finally:
        logging.getLogger('rubancf').removeHandler(handler)

    print(dumps(result))
    return EXIT_OK
