"""Weyl command: W_alpha f and the round trip V_alpha W_alpha f on a grid."""

import argparse

import numpy as np
import pandas as pd

from app.commands.common import add_alpha, add_function, add_grid, add_nodes, add_out, build_config
from app.config import get_config
from app.logger import get_logger, log_command, log_outcome
from app.models.run_config import RunConfig
from app.services.funcspace import from_descriptor
from app.services.intertwine import v_alpha, weyl_image
from app.utils.responses import handle_exceptions, write_csv

logger = get_logger(__name__)


def weyl_table(config: RunConfig) -> pd.DataFrame:
    """Columns y, weyl, v_of_weyl, f, abs_diff; y = 0 is skipped."""
    f = from_descriptor(config.function)
    ys = config.grid.points()
    skipped = int(np.count_nonzero(ys == 0.0))
    if skipped:
        logger.info(f"Skipping {skipped} grid point(s) at y = 0")
    ys = ys[ys != 0.0]
    image = weyl_image(f, config.order, config.nodes)
    weyl_values = np.real(image(ys)) if ys.size else np.array([])
    recovered = np.real(np.atleast_1d(v_alpha(image, config.order, ys, config.nodes))) if ys.size else np.array([])
    original = np.real(np.asarray(f(ys)))
    return pd.DataFrame({
        'y': ys,
        'weyl': weyl_values,
        'v_of_weyl': recovered,
        'f': original,
        'abs_diff': np.abs(recovered - original),
    })


@handle_exceptions
def run(args: argparse.Namespace) -> int:
    config = build_config(args, 'weyl')
    log_command('weyl', alpha=config.order.alpha, grid=config.grid, nodes=config.nodes)
    frame = weyl_table(config)
    if len(frame) and float(frame['abs_diff'].max()) > get_config().DEFAULT_TOL:
        logger.warning(f"Round trip V W f differs from f by {float(frame['abs_diff'].max()):.3e}")
    write_csv(frame, config.out)
    log_outcome('weyl', 0)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser('weyl', help='Weyl integral and its inverse on a real grid')
    add_alpha(parser)
    add_function(parser)
    add_grid(parser)
    add_nodes(parser)
    add_out(parser)
    parser.set_defaults(handler=run)
