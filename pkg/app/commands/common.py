"""
Shared argument handling for the CLI commands.

Every command builds a RunConfig from its parsed arguments; invalid values
surface as UsageError (exit 2) through handle_exceptions.
"""

import argparse
import json
from typing import Any, Dict, Optional

from app.config import get_config
from app.errors import DescriptorError, UsageError
from app.models.run_config import ComplexGrid, GridSpec, RunConfig


def add_alpha(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--alpha', type=float, default=0.5, help='order alpha > -1/2 (default 0.5)')


def add_nodes(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--nodes', type=int, default=None,
                        help='quadrature node count (default BS_NODES, 64)')


def add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--out', default='-', help="output path, '-' for stdout")


def add_function(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument('--function', required=required,
                        help='JSON function descriptor or @file, e.g. \'{"kind": "poly_bump", "a": 1, "m": 2}\'')


def add_grid(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--grid', required=True, help='real grid min:max:steps')


def load_descriptor(text: Optional[str]) -> Optional[Dict[str, Any]]:
    """Parse a JSON descriptor given inline or as @path."""
    if text is None:
        return None
    if text.startswith('@'):
        with open(text[1:], 'r', encoding='utf-8') as handle:
            text = handle.read()
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise DescriptorError(f"descriptor is not valid JSON: {e}")
    return value


def parse_complex(text: str) -> complex:
    """Accept 1, -2.5, 1+2i, 3j."""
    try:
        return complex(str(text).replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise UsageError(f"cannot parse '{text}' as a complex number")


def build_config(args: argparse.Namespace, command: str, grid_min_steps: int = 1, **extra) -> RunConfig:
    """RunConfig from parsed arguments; absent options keep their defaults."""
    grid = GridSpec.parse(args.grid, grid_min_steps) if getattr(args, 'grid', None) else None
    rectangle = None
    if getattr(args, 're', None) and getattr(args, 'im', None):
        rectangle = ComplexGrid(GridSpec.parse(args.re), GridSpec.parse(args.im))
    nodes = getattr(args, 'nodes', None)
    return RunConfig(
        command=command,
        alpha=getattr(args, 'alpha', 0.5),
        function=load_descriptor(getattr(args, 'function', None)),
        grid=grid,
        rectangle=rectangle,
        lam=parse_complex(getattr(args, 'lam', '1')),
        nodes=get_config().DEFAULT_NODES if nodes is None else nodes,
        tol=getattr(args, 'tol', None),
        out=getattr(args, 'out', '-'),
        suite=getattr(args, 'suite', 'all'),
        extra=extra,
    )
