"""
Scan command.

Evaluates F_BS on a complex rectangle and fits a growth envelope:
exponential type for a function, (m, b) for a Dirac combination.
"""

import argparse
import os
import sys
from typing import Optional, Tuple

from app.commands.common import add_alpha, add_function, add_nodes, add_out, build_config, load_descriptor
from app.errors import UsageError
from app.logger import get_logger, log_command, log_outcome
from app.models.run_config import RunConfig
from app.models.spectra import DiracCombination, EnvelopeFit, SpectrumSample
from app.services.funcspace import from_descriptor
from app.services.paley_wiener import complex_scan, fit_exponential_type, schwartz_envelope_check
from app.utils.responses import dumps, handle_exceptions, resolve_output, write_csv, write_json
from processing.jobs import make_pool

logger = get_logger(__name__)


def sidecar_path(out: str) -> Optional[str]:
    """<out stem>.fit.json next to the CSV, or None when the CSV goes to stdout."""
    target = resolve_output(out)
    if target is None:
        return None
    stem, _ = os.path.splitext(target)
    return f"{stem}.fit.json"


def scan_source(config: RunConfig):
    dirac = config.extra.get('dirac')
    if dirac is not None and config.function is not None:
        raise UsageError("give either --function or --dirac, not both")
    if dirac is not None:
        if not isinstance(dirac, list) or not dirac:
            raise UsageError("--dirac expects a non-empty list of [weight, location, order] triples")
        return DiracCombination.from_triples(dirac, config.extra.get('support_bound'))
    if config.function is None:
        raise UsageError("scan needs --function or --dirac")
    return from_descriptor(config.function)


def scan(config: RunConfig, pool=None) -> Tuple[SpectrumSample, EnvelopeFit]:
    """Complex scan plus the envelope fit matching the source kind."""
    if config.rectangle is None:
        raise UsageError("scan needs both --re and --im")
    source = scan_source(config)
    sample = complex_scan(source, config.order, config.rectangle, config.nodes, pool)
    if isinstance(source, DiracCombination):
        fit = schwartz_envelope_check(source, config.order, config.rectangle, config.nodes, sample=sample)
    else:
        fit = fit_exponential_type(sample)
    return sample, fit


@handle_exceptions
def run(args: argparse.Namespace) -> int:
    config = build_config(
        args, 'scan',
        dirac=load_descriptor(args.dirac),
        support_bound=args.support_bound,
    )
    log_command('scan', alpha=config.order.alpha, re=config.rectangle and config.rectangle.re,
                im=config.rectangle and config.rectangle.im)
    sample, fit = scan(config, make_pool(getattr(args, 'threads', None)))
    write_csv(sample.to_frame(), config.out)
    payload = {**fit.to_serialisable(), 'alpha': config.order.alpha, 'source': sample.descriptor}
    sidecar = sidecar_path(config.out)
    if sidecar is None:
        sys.stderr.write(dumps(payload))
    else:
        write_json(payload, sidecar)
    logger.info(f"Scan: {len(sample)} points, fit {fit.kind}")
    log_outcome('scan', 0)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser('scan', help='complex-plane scan with growth envelope fit')
    add_alpha(parser)
    parser.add_argument('--re', required=True, help='real-part grid min:max:steps')
    parser.add_argument('--im', required=True, help='imaginary-part grid min:max:steps')
    add_function(parser, required=False)
    parser.add_argument('--dirac', default=None,
                        help="Dirac combination '[[w, x, m], ...]' or @file")
    parser.add_argument('--support-bound', dest='support_bound', type=float, default=None,
                        help='b with every Dirac location in [-b, b]')
    add_nodes(parser)
    add_out(parser)
    parser.set_defaults(handler=run)
