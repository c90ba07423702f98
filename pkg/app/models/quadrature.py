"""Immutable quadrature rules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from app.errors import SizeError


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights on (lo, hi).

    The weight (hi - t)^left_exponent * (t - lo)^lower_exponent is absorbed
    into ``weights``; Legendre rules have both exponents 0.
    """

    nodes: np.ndarray
    weights: np.ndarray
    interval: Tuple[float, float]
    left_exponent: float = 0.0
    lower_exponent: float = 0.0

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        weights = np.array(self.weights, dtype=float)
        lo, hi = self.interval
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size < 1:
            raise SizeError("nodes and weights must be equal-length, non-empty vectors")
        if np.any(nodes <= lo) or np.any(nodes >= hi):
            raise SizeError(f"quadrature nodes escape the open interval ({lo}, {hi})")
        if np.any(weights <= 0):
            raise SizeError("quadrature weights must be positive")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, 'nodes', nodes)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'interval', (float(lo), float(hi)))

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    def integrate(self, integrand: Union[Callable, np.ndarray]):
        """Apply the rule to samples or to a vectorized callable."""
        values = integrand(self.nodes) if callable(integrand) else np.asarray(integrand)
        return np.tensordot(self.weights, values, axes=(0, 0))

    def mapped(self, lo: float, hi: float) -> "QuadratureRule":
        """Affine image on (lo, hi), carrying the weight (hi - y)^left (y - lo)^lower along."""
        a, b = self.interval
        if not hi > lo:
            raise SizeError(f"cannot map a rule onto ({lo}, {hi})")
        ratio = (hi - lo) / (b - a)
        return QuadratureRule(
            lo + ratio * (self.nodes - a),
            ratio ** (1.0 + self.left_exponent + self.lower_exponent) * self.weights,
            (lo, hi),
            self.left_exponent,
            self.lower_exponent,
        )
