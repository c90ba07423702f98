"""
Kernel command.

Tabulates S_lambda^alpha(x) on a real grid by both routes.
"""

import argparse

import numpy as np
import pandas as pd

from app.commands.common import add_alpha, add_grid, add_nodes, add_out, build_config
from app.config import get_config
from app.logger import get_logger, log_command, log_outcome
from app.models.run_config import RunConfig
from app.services.kernel import kernel_integral, kernel_series
from app.utils.responses import handle_exceptions, write_csv
from processing.jobs import make_pool

logger = get_logger(__name__)

KERNEL_COLUMNS = ['x', 're_series', 'im_series', 're_integral', 'im_integral', 'abs_diff']


def kernel_table(config: RunConfig, pool=None) -> pd.DataFrame:
    """Series and integral values with their difference, one row per grid point."""
    xs = config.grid.points()

    def evaluate(x: float):
        series = kernel_series(config.order, config.lam, x).value
        integral = kernel_integral(config.order, config.lam, x, config.nodes).value
        return series, integral

    pairs = pool.map_ordered(evaluate, xs, desc='kernel') if pool else [evaluate(x) for x in xs]
    series = np.array([p[0] for p in pairs], dtype=complex)
    integral = np.array([p[1] for p in pairs], dtype=complex)
    return pd.DataFrame({
        'x': xs,
        're_series': series.real,
        'im_series': series.imag,
        're_integral': integral.real,
        'im_integral': integral.imag,
        'abs_diff': np.abs(series - integral),
    }, columns=KERNEL_COLUMNS)


@handle_exceptions
def run(args: argparse.Namespace) -> int:
    config = build_config(args, 'kernel')
    log_command('kernel', alpha=config.order.alpha, lam=config.lam, grid=config.grid, nodes=config.nodes)
    frame = kernel_table(config, make_pool(getattr(args, 'threads', None)))
    worst = float(frame['abs_diff'].max())
    logger.info(f"Kernel table: {len(frame)} rows, max route difference {worst:.3e}")
    if worst > get_config().DEFAULT_TOL:
        logger.warning(f"Kernel routes differ by {worst:.3e} > {get_config().DEFAULT_TOL:.1e}")
    write_csv(frame, config.out)
    log_outcome('kernel', 0)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser('kernel', help='tabulate the Bessel-Struve kernel by series and integral')
    add_alpha(parser)
    parser.add_argument('--lambda', dest='lam', default='1', help='spectral parameter, real or complex (1+2i)')
    add_grid(parser)
    add_nodes(parser)
    add_out(parser)
    parser.set_defaults(handler=run)
