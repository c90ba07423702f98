"""
Transform command.

Bessel-Struve transform of a function on a real grid, by the direct route,
through the Weyl integral, or both side by side.
"""

import argparse

import numpy as np
import pandas as pd

from app.commands.common import add_alpha, add_function, add_grid, add_nodes, add_out, build_config
from app.config import get_config
from app.logger import get_logger, log_command, log_outcome
from app.models.run_config import RunConfig
from app.services.funcspace import from_descriptor
from app.services.transforms import spectrum_line
from app.utils.responses import handle_exceptions, write_csv

logger = get_logger(__name__)

ROUTE_CHOICES = ('direct', 'factored', 'both')


def transform_table(config: RunConfig, route: str = 'both') -> pd.DataFrame:
    """
    Transform values along config.grid.

    With route 'both' the columns are lambda, re_direct, im_direct,
    re_factored, im_factored, abs_diff; a single route keeps its own pair.
    """
    f = from_descriptor(config.function)
    columns = {'lambda': config.grid.points()}
    values = {}
    for name in ('direct', 'factored'):
        if route in (name, 'both'):
            sample = spectrum_line(f, config.order, config.grid, route=name, nodes=config.nodes)
            values[name] = sample.values
            columns[f're_{name}'] = sample.values.real
            columns[f'im_{name}'] = sample.values.imag
    if route == 'both':
        columns['abs_diff'] = np.abs(values['direct'] - values['factored'])
    return pd.DataFrame(columns)


@handle_exceptions
def run(args: argparse.Namespace) -> int:
    config = build_config(args, 'transform')
    log_command('transform', alpha=config.order.alpha, grid=config.grid, route=args.route, nodes=config.nodes)
    frame = transform_table(config, args.route)
    if 'abs_diff' in frame:
        worst = float(frame['abs_diff'].max())
        logger.info(f"Transform table: {len(frame)} rows, max route difference {worst:.3e}")
        if worst > get_config().DEFAULT_TOL:
            logger.warning(f"Transform routes differ by {worst:.3e} > {get_config().DEFAULT_TOL:.1e}")
    write_csv(frame, config.out)
    log_outcome('transform', 0)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser('transform', help='Bessel-Struve transform on a real grid')
    add_alpha(parser)
    add_function(parser)
    add_grid(parser)
    parser.add_argument('--route', choices=ROUTE_CHOICES, default='both', help='evaluation route (default both)')
    add_nodes(parser)
    add_out(parser)
    parser.set_defaults(handler=run)
