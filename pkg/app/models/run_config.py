"""CLI run configuration and grid specifications."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from app.errors import GridSpecError, UsageError
from app.models.order import Order


@dataclass(frozen=True)
class GridSpec:
    """Real grid ``min:max:steps``."""

    lo: float
    hi: float
    steps: int

    @classmethod
    def parse(cls, text: str, min_steps: int = 1) -> "GridSpec":
        parts = str(text).split(':')
        if len(parts) != 3:
            raise GridSpecError(f"grid must read min:max:steps, got '{text}'")
        try:
            lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise GridSpecError(f"grid must read min:max:steps, got '{text}'")
        spec = cls(lo, hi, steps)
        spec.validate(min_steps)
        return spec

    def validate(self, min_steps: int = 1) -> None:
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)):
            raise GridSpecError("grid bounds must be finite")
        if self.steps < max(1, min_steps):
            raise GridSpecError(f"grid needs at least {max(1, min_steps)} steps, got {self.steps}")
        if self.lo > self.hi:
            raise GridSpecError(f"grid minimum {self.lo} exceeds maximum {self.hi}")
        if self.steps > 1 and self.lo == self.hi:
            raise GridSpecError("a degenerate grid interval admits a single step only")

    def points(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.steps)

    @property
    def extent(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def __str__(self) -> str:
        return f"{self.lo!r}:{self.hi!r}:{self.steps}"


@dataclass(frozen=True)
class ComplexGrid:
    """Rectangle re x im, enumerated with re outer and im inner, both increasing."""

    re: GridSpec
    im: GridSpec

    @classmethod
    def square(cls, radius: float, steps: int) -> "ComplexGrid":
        spec = GridSpec(-radius, radius, steps)
        return cls(spec, spec)

    def points(self) -> np.ndarray:
        re, im = self.re.points(), self.im.points()
        return (re[:, None] + 1j * im[None, :]).ravel()

    @property
    def shape(self):
        return (self.re.steps, self.im.steps)

    @property
    def re_extent(self) -> float:
        return self.re.extent

    @property
    def im_extent(self) -> float:
        return self.im.extent


@dataclass
class RunConfig:
    """Validated settings for one CLI command."""

    command: str
    alpha: float = 0.5
    function: Optional[Dict[str, Any]] = None
    grid: Optional[GridSpec] = None
    rectangle: Optional[ComplexGrid] = None
    lam: complex = 1.0
    nodes: int = 64
    tol: Optional[float] = None
    out: str = '-'
    suite: str = 'all'
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.order = Order.from_alpha(self.alpha)
        if self.nodes < 8:
            raise UsageError(f"nodes must be at least 8, got {self.nodes}")
        if self.tol is not None and not self.tol > 0:
            raise UsageError(f"tol must be positive, got {self.tol}")
        if self.rectangle is not None:
            self.rectangle.re.validate(min_steps=2)
            self.rectangle.im.validate(min_steps=2)
