"""
Verify command.

Runs the registered property suites and writes a JSON report; the exit code
is 0 only when every property passes.
"""

import argparse
from typing import Any, Dict, List

from app.commands.common import add_out
from app.errors import UsageError
from app.logger import LoggerAdapter, get_logger, log_command, log_outcome
from app.utils.responses import handle_exceptions, success_response, write_json
from processing.jobs import make_pool
from processing.properties import SUITES, PropertyResult, property_registry

logger = get_logger(__name__)


def build_report(suite: str, results: List[PropertyResult]) -> Dict[str, Any]:
    failed = [r.name for r in results if not r.passed]
    exit_code = 1 if failed else 0
    return success_response(
        data={
            'suite': suite,
            'properties': [r.to_serialisable() for r in results],
            'passed': len(results) - len(failed),
            'failed': failed,
        },
        message=f"{len(results) - len(failed)}/{len(results)} properties passed",
        exit_code=exit_code,
    )


@handle_exceptions
def run(args: argparse.Namespace) -> int:
    if args.list:
        write_json({'properties': property_registry.serialise(args.suite)}, args.out)
        return 0
    if args.tol is not None and not args.tol > 0:
        raise UsageError(f"tol must be positive, got {args.tol}")
    log = LoggerAdapter(logger, {'command': 'verify', 'suite': args.suite})
    log_command('verify', suite=args.suite, tol=args.tol)
    pool = make_pool(getattr(args, 'threads', None))
    results = property_registry.run_suite(args.suite, args.tol, pool)
    report = build_report(args.suite, results)
    write_json(report, args.out)
    if report['exit_code']:
        log.warning(f"Failed properties: {', '.join(report['data']['failed'])}")
    log_outcome('verify', report['exit_code'])
    return report['exit_code']


def register(subparsers) -> None:
    parser = subparsers.add_parser('verify', help='run the numerical verification suites')
    parser.add_argument('--suite', default='all', choices=SUITES + ('all',), help='suite to run (default all)')
    parser.add_argument('--tol', type=float, default=None, help='tolerance replacing every property tolerance')
    parser.add_argument('--list', action='store_true', help='print the property catalogue and exit')
    add_out(parser)
    parser.set_defaults(handler=run)
