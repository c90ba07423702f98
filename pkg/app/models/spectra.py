"""Kernel points, spectrum samples, Dirac combinations and growth envelopes."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from app.errors import DomainError, OrderError, UsageError
from app.models.order import Order

MAX_DIRAC_ORDER = 12


class KernelRoute(str, enum.Enum):
    """How a kernel value was computed."""
    SERIES = 'series'
    INTEGRAL = 'integral'


@dataclass(frozen=True)
class KernelPoint:
    """A single evaluation of S_lambda^alpha(x)."""

    order: Order
    lam: complex
    x: complex
    value: complex
    route: KernelRoute
    est_error: float = 0.0
    nodes: Optional[int] = None

    def to_serialisable(self) -> Dict[str, Any]:
        return {
            'alpha': self.order.alpha,
            'lambda': [self.lam.real, self.lam.imag],
            'x': [self.x.real, self.x.imag],
            'value': [self.value.real, self.value.imag],
            'route': self.route.value,
            'est_error': self.est_error,
            'nodes': self.nodes,
        }


@dataclass(frozen=True)
class Dx2Expansion:
    """Coefficients of (d/dx^2)^p f = sum_i gamma_i x^(i - 2p) f^(i)."""

    p: int
    exact: Tuple[Fraction, ...]

    @property
    def coefficients(self) -> Tuple[float, ...]:
        return tuple(float(c) for c in self.exact)

    def apply(self, derivatives: Sequence, x):
        """Combine f^(i)(x), i = 0..p, into (d/dx^2)^p f(x)."""
        x = np.asarray(x, dtype=float)
        total = 0.0
        for i, coefficient in enumerate(self.exact):
            if coefficient:
                total = total + float(coefficient) * x ** (i - 2 * self.p) * np.asarray(derivatives[i])
        return total


@dataclass
class SpectrumSample:
    """Transform values at a set of spectral points."""

    points: np.ndarray
    values: np.ndarray
    order: Order
    descriptor: str = ''
    route: str = 'direct'
    support_radius: float = 0.0

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=complex)
        self.values = np.asarray(self.values, dtype=complex)
        if self.points.shape != self.values.shape:
            raise UsageError("spectrum points and values must have equal length")

    def __len__(self) -> int:
        return int(self.points.size)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            're_z': self.points.real,
            'im_z': self.points.imag,
            're_F': self.values.real,
            'im_F': self.values.imag,
            'abs_F': np.abs(self.values),
        })


@dataclass(frozen=True)
class DiracTerm:
    weight: complex
    location: float
    derivative_order: int = 0


@dataclass(frozen=True)
class DiracCombination:
    """Finite sum of weighted derivatives of point masses."""

    terms: Tuple[DiracTerm, ...]
    support_bound: float

    def __post_init__(self):
        if self.support_bound <= 0:
            raise DomainError("support bound must be positive")
        for term in self.terms:
            if abs(term.location) > self.support_bound:
                raise DomainError(
                    f"Dirac location {term.location} outside [-{self.support_bound}, {self.support_bound}]"
                )
            if not 0 <= term.derivative_order <= MAX_DIRAC_ORDER:
                raise OrderError(f"Dirac derivative order must lie in 0..{MAX_DIRAC_ORDER}")

    @classmethod
    def from_triples(cls, triples: Sequence[Sequence], support_bound: Optional[float] = None) -> "DiracCombination":
        terms = []
        for triple in triples:
            weight, location = triple[0], triple[1]
            order = int(triple[2]) if len(triple) > 2 else 0
            if isinstance(weight, (list, tuple)):
                weight = complex(weight[0], weight[1])
            terms.append(DiracTerm(complex(weight), float(location), order))
        if support_bound is None:
            support_bound = max([abs(t.location) for t in terms] + [0.0]) or 1.0
        return cls(tuple(terms), float(support_bound))

    def scaled(self, factor: complex) -> "DiracCombination":
        return DiracCombination(
            tuple(DiracTerm(factor * t.weight, t.location, t.derivative_order) for t in self.terms),
            self.support_bound,
        )

    def __add__(self, other: "DiracCombination") -> "DiracCombination":
        return DiracCombination(self.terms + other.terms, max(self.support_bound, other.support_bound))

    def describe(self) -> str:
        parts = [f"{t.weight}*d{t.derivative_order}@{t.location}" for t in self.terms]
        return '+'.join(parts) or '0'


@dataclass
class EnvelopeFit:
    """Fitted growth bound C e^(a|z|) or c (1+|z|^2)^(m/2) e^(b|Im z|)."""

    kind: str
    C: float
    a: float = 0.0
    m: int = 0
    b: float = 0.0
    residual: float = 0.0
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_serialisable(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {'kind': self.kind, 'C': self.C, 'residual': self.residual}
        if self.kind == 'exp_type':
            payload['a'] = self.a
        else:
            payload['m'] = self.m
            payload['b'] = self.b
        payload.update(self.extras)
        return payload
