"""
CLI application factory.

Creates the argument parser, registers every command module and dispatches
to the selected handler.
"""

import argparse
import sys
from typing import List, Optional

from app.config import Config, get_config
from app.logger import get_logger, set_level
from app.utils.responses import report_error

__version__ = '1.0.0'

VALUE_FLAGS = ('--alpha', '--lambda', '--grid', '--re', '--im', '--tol', '--support-bound')

logger = get_logger(__name__)


def create_cli(config: Config = None) -> argparse.ArgumentParser:
    """
    Create and configure the command-line parser.

    Args:
        config: Optional configuration object. If not provided, uses default config.

    Returns:
        Parser with one subcommand per command module
    """
    from app.commands import COMMANDS

    if config is None:
        config = get_config()

    parser = argparse.ArgumentParser(
        prog='bs',
        description='Bessel-Struve kernel, intertwining operators, transforms and Paley-Wiener checks',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--log-level', dest='log_level', default=config.LOG_LEVEL,
                        help=f'logging level (default {config.LOG_LEVEL})')
    parser.add_argument('--threads', type=int, default=None,
                        help=f'worker threads for grid evaluation (default {config.THREADS})')

    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for module in COMMANDS:
        module.register(subparsers)

    logger.debug(f"Commands registered: {', '.join(m.__name__.rsplit('.', 1)[-1] for m in COMMANDS)}")
    return parser


def attach_values(argv: List[str]) -> List[str]:
    """Join values such as -2:2:41 to their flag so they are not read as options."""
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if token in VALUE_FLAGS and index + 1 < len(argv) and argv[index + 1].startswith('-'):
            joined.append(f"{token}={argv[index + 1]}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv and run the selected command.

    Returns:
        Exit code: 0 success, 1 numerical or verification failure, 2 usage error
    """
    parser = create_cli()
    try:
        args = parser.parse_args(attach_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    set_level(args.log_level)
    if args.threads is not None and args.threads < 1:
        report_error(f"--threads must be at least 1, got {args.threads}")
        return 2

    logger.info(f"Running command '{args.command}'")
    return args.handler(args)
