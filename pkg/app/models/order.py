"""Order parameter of the Bessel-Struve operator and its weighted measure."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from app.errors import OrderError

HALF_INTEGER_TOL = 1e-14


@dataclass(frozen=True)
class Order:
    """The parameter alpha > -1/2 split as alpha = k + r.

    r = 1/2 exactly on the half-integer branch; otherwise r lies in (-1/2, 1/2).
    """

    alpha: float
    k: int
    r: float
    half_integer: bool

    def __post_init__(self):
        if not math.isfinite(self.alpha) or self.alpha <= -0.5:
            raise OrderError("alpha must exceed -1/2")
        if self.k < 0 or abs(self.k + self.r - self.alpha) > HALF_INTEGER_TOL:
            raise OrderError(f"alpha={self.alpha} does not split as k={self.k} + r={self.r}")
        if self.half_integer != (self.r == 0.5) or not -0.5 < self.r <= 0.5:
            raise OrderError(f"r={self.r} is inconsistent with half_integer={self.half_integer}")

    @classmethod
    def from_alpha(cls, alpha: float) -> "Order":
        alpha = float(alpha)
        if not math.isfinite(alpha) or alpha <= -0.5:
            raise OrderError("alpha must exceed -1/2")
        shifted = alpha - 0.5
        nearest = round(shifted)
        if nearest >= 0 and abs(shifted - nearest) <= HALF_INTEGER_TOL:
            k = int(nearest)
            return cls(alpha=k + 0.5, k=k, r=0.5, half_integer=True)
        k = max(0, math.ceil(shifted))
        return cls(alpha=alpha, k=k, r=alpha - k, half_integer=False)

    @property
    def weight_exponent(self) -> float:
        """Exponent alpha - 1/2 of the intertwining weight (1 - t^2)^(alpha - 1/2)."""
        return self.alpha - 0.5

    @property
    def measure_exponent(self) -> float:
        """Exponent 2*alpha + 1 of the density |x|^(2*alpha + 1)."""
        return 2.0 * self.alpha + 1.0

    def lowered(self) -> "Order":
        """The order alpha - 1 (requires alpha > 1/2)."""
        if self.alpha <= 0.5:
            raise OrderError(f"alpha - 1 is not a valid order for alpha={self.alpha}")
        return Order.from_alpha(self.alpha - 1.0)

    def to_serialisable(self) -> dict:
        return {
            'alpha': self.alpha,
            'k': self.k,
            'r': self.r,
            'half_integer': self.half_integer,
        }


def as_order(value) -> Order:
    """Accept either an Order or a bare alpha."""
    if isinstance(value, Order):
        return value
    return Order.from_alpha(value)


@dataclass(frozen=True)
class WeightedMeasure:
    """dmu_alpha(x) = |x|^(2 alpha + 1) dx."""

    order: Order

    def density(self, x):
        return np.abs(np.asarray(x, dtype=float)) ** self.order.measure_exponent
