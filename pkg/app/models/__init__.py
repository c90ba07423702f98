"""
Domain models.

Immutable value types shared by the numerical services and the CLI.
"""

from app.models.order import Order, WeightedMeasure, as_order
from app.models.quadrature import QuadratureRule
from app.models.functions import HalfLineSmoothFunction, OriginLimit, SmoothCompactFunction
from app.models.spectra import (
    DiracCombination,
    DiracTerm,
    Dx2Expansion,
    EnvelopeFit,
    KernelPoint,
    KernelRoute,
    SpectrumSample,
)
from app.models.run_config import ComplexGrid, GridSpec, RunConfig

__all__ = [
    'Order',
    'WeightedMeasure',
    'as_order',
    'QuadratureRule',
    'SmoothCompactFunction',
    'HalfLineSmoothFunction',
    'OriginLimit',
    'KernelPoint',
    'KernelRoute',
    'Dx2Expansion',
    'SpectrumSample',
    'DiracTerm',
    'DiracCombination',
    'EnvelopeFit',
    'GridSpec',
    'ComplexGrid',
    'RunConfig',
]
