"""Compactly supported test functions with derivative access."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Tuple

import numpy as np

from app.errors import DomainError, SmoothnessError

# evaluator(x, n) -> n-th derivative at x; x is a numpy array
Evaluator = Callable[[np.ndarray, int], np.ndarray]


@dataclass(frozen=True)
class SmoothCompactFunction:
    """A function supported in [-a, a] with derivatives up to a declared order."""

    support_radius: float
    max_derivative_order: int
    evaluator: Evaluator
    smoothness_class: str = 'custom'
    params: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __call__(self, x, n: int = 0):
        self._check_order(n)
        arr = np.asarray(x, dtype=float)
        out = np.asarray(self.evaluator(arr, n))
        out = np.where(np.abs(arr) > self.support_radius, 0.0, out)
        return out.item() if out.ndim == 0 else out

    def derivative(self, x, n: int):
        return self(x, n)

    @property
    def support(self) -> Tuple[float, float]:
        return (-self.support_radius, self.support_radius)

    def _check_order(self, n: int) -> None:
        if n < 0 or n > self.max_derivative_order:
            raise SmoothnessError(
                f"derivative of order {n} requested from a {self.smoothness_class} "
                f"function with derivative budget {self.max_derivative_order}"
            )


@dataclass(frozen=True)
class OriginLimit:
    """One-sided limit record of y^n f^(n)(y) as y -> 0 from one side."""

    side: int
    order: int
    value: float
    spread: float
    converged: bool

    def to_serialisable(self) -> Dict[str, Any]:
        return {
            'side': '+' if self.side > 0 else '-',
            'order': self.order,
            'value': self.value,
            'spread': self.spread,
            'converged': self.converged,
        }


@dataclass(frozen=True)
class HalfLineSmoothFunction(SmoothCompactFunction):
    """Compactly supported function that is smooth on the punctured line only."""

    origin_limits: Tuple[OriginLimit, ...] = ()

    def __call__(self, x, n: int = 0):
        arr = np.asarray(x, dtype=float)
        if np.any(arr == 0.0):
            raise DomainError("half-line function is not defined at 0")
        return super().__call__(arr, n)
