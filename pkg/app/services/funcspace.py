"""
Function space service.

Builds compactly supported test functions with derivative access, the
weighted measure mu_alpha, function descriptors for the CLI and the
numerical K0 membership test.
"""

import json
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial

from app.errors import DescriptorError, DomainError, UsageError
from app.logger import get_logger
from app.models.functions import HalfLineSmoothFunction, OriginLimit, SmoothCompactFunction
from app.models.order import Order, WeightedMeasure, as_order
from app.services.numerics import gauss_jacobi_unit

logger = get_logger(__name__)

EXP_BUMP_MAX_ORDER = 8
K0_DYADIC_RANGE = range(10, 21)
K0_TAIL_START = 15
K0_TOLERANCE = 1e-6


def _polynomial_evaluator(polynomial: Polynomial, max_order: int) -> Callable[[np.ndarray, int], np.ndarray]:
    derivatives = tuple(polynomial.deriv(n) if n else polynomial for n in range(max_order + 1))

    def evaluate(x: np.ndarray, n: int) -> np.ndarray:
        return derivatives[n](x)

    return evaluate


def make_poly_bump(a: float, m: int) -> SmoothCompactFunction:
    """
    f(x) = (1 - (x/a)^2)^m on [-a, a], zero outside.

    Args:
        a: Support radius
        m: Exponent, m >= 2; derivatives up to m - 1 are continuous

    Returns:
        SmoothCompactFunction of class poly_bump
    """
    if not a > 0:
        raise UsageError(f"support radius must be positive, got {a}")
    if int(m) != m or m < 2:
        raise UsageError(f"poly_bump exponent must be an integer >= 2, got {m}")
    m = int(m)
    polynomial = Polynomial([1.0, 0.0, -1.0 / (a * a)]) ** m
    evaluator = _polynomial_evaluator(polynomial, m - 1)
    return SmoothCompactFunction(
        support_radius=float(a),
        max_derivative_order=m - 1,
        evaluator=evaluator,
        smoothness_class='poly_bump',
        params={'kind': 'poly_bump', 'a': float(a), 'm': m},
    )


def make_odd_bump(a: float, m: int) -> SmoothCompactFunction:
    """f(x) = x (1 - (x/a)^2)^m on [-a, a]; an odd member of D_a."""
    if not a > 0:
        raise UsageError(f"support radius must be positive, got {a}")
    if int(m) != m or m < 2:
        raise UsageError(f"odd_bump exponent must be an integer >= 2, got {m}")
    m = int(m)
    polynomial = Polynomial([0.0, 1.0]) * Polynomial([1.0, 0.0, -1.0 / (a * a)]) ** m
    return SmoothCompactFunction(
        support_radius=float(a),
        max_derivative_order=m - 1,
        evaluator=_polynomial_evaluator(polynomial, m - 1),
        smoothness_class='odd_bump',
        params={'kind': 'odd_bump', 'a': float(a), 'm': m},
    )


def _exp_bump_polynomials(max_order: int) -> Tuple[Polynomial, ...]:
    """P_n with f^(n)(x) = a^-n P_n(u) (1-u^2)^(-2n) f(x), u = x/a."""
    u = Polynomial([0.0, 1.0])
    one_minus = Polynomial([1.0, 0.0, -1.0])
    polynomials = [Polynomial([1.0])]
    for n in range(max_order):
        p = polynomials[-1]
        polynomials.append(p.deriv() * one_minus ** 2 + 4 * n * u * one_minus * p - 2 * u * p)
    return tuple(polynomials)


_EXP_POLYNOMIALS = _exp_bump_polynomials(EXP_BUMP_MAX_ORDER)


def make_exp_bump(a: float) -> SmoothCompactFunction:
    """f(x) = exp(-1 / (1 - (x/a)^2)) on (-a, a), derivatives to order 8."""
    if not a > 0:
        raise UsageError(f"support radius must be positive, got {a}")

    def evaluate(x: np.ndarray, n: int) -> np.ndarray:
        u = x / a
        s = 1.0 - u * u
        inside = s > 0
        safe = np.where(inside, s, 1.0)
        envelope = np.exp(-1.0 / safe - 2.0 * n * np.log(safe))
        return np.where(inside, _EXP_POLYNOMIALS[n](u) * envelope * a ** (-n), 0.0)

    return SmoothCompactFunction(
        support_radius=float(a),
        max_derivative_order=EXP_BUMP_MAX_ORDER,
        evaluator=evaluate,
        smoothness_class='exp_bump',
        params={'kind': 'exp_bump', 'a': float(a)},
    )


def make_custom(a: float, evaluator: Callable, max_order: int, vectorized: bool = True,
                complex_valued: bool = False) -> SmoothCompactFunction:
    """Wrap an (x, n) callback as a SmoothCompactFunction."""
    if not vectorized:
        scalar = evaluator
        otype = complex if complex_valued else float

        def evaluator(x: np.ndarray, n: int) -> np.ndarray:
            return np.vectorize(lambda v: scalar(float(v), n), otypes=[otype])(x)

    return SmoothCompactFunction(float(a), int(max_order), evaluator, 'custom', {'kind': 'custom', 'a': float(a)})


def zero_function(a: float = 1.0, max_order: int = 12) -> SmoothCompactFunction:
    """The zero function with an arbitrary derivative budget."""
    return SmoothCompactFunction(
        float(a), max_order, lambda x, n: np.zeros_like(x, dtype=float), 'custom', {'kind': 'zero', 'a': float(a)}
    )


def reflect(f: SmoothCompactFunction) -> SmoothCompactFunction:
    """x -> f(-x)."""
    return SmoothCompactFunction(
        f.support_radius,
        f.max_derivative_order,
        lambda x, n: (-1.0) ** n * np.asarray(f.evaluator(-x, n)),
        f.smoothness_class,
        {**f.params, 'reflected': not f.params.get('reflected', False)},
    )


def scale(f: SmoothCompactFunction, factor: complex) -> SmoothCompactFunction:
    """x -> factor * f(x)."""
    return SmoothCompactFunction(
        f.support_radius,
        f.max_derivative_order,
        lambda x, n: factor * np.asarray(f.evaluator(x, n)),
        f.smoothness_class,
        {**f.params, 'scale': factor},
    )


def from_descriptor(descriptor: Union[str, Dict[str, Any]]) -> SmoothCompactFunction:
    """
    Build a function from its JSON descriptor.

    Examples:
        {"kind": "poly_bump", "a": 1.0, "m": 2}
        {"kind": "exp_bump", "a": 2.0}
        {"kind": "odd_bump", "a": 1.0, "m": 3}
    """
    if isinstance(descriptor, str):
        try:
            descriptor = json.loads(descriptor)
        except json.JSONDecodeError as e:
            raise DescriptorError(f"function descriptor is not valid JSON: {e}")
    if not isinstance(descriptor, dict) or 'kind' not in descriptor:
        raise DescriptorError("function descriptor must be an object with a 'kind'")
    kind = descriptor['kind']
    try:
        if kind == 'poly_bump':
            return make_poly_bump(float(descriptor.get('a', 1.0)), int(descriptor.get('m', 2)))
        if kind == 'odd_bump':
            return make_odd_bump(float(descriptor.get('a', 1.0)), int(descriptor.get('m', 3)))
        if kind == 'exp_bump':
            return make_exp_bump(float(descriptor.get('a', 1.0)))
        if kind == 'zero':
            return zero_function(float(descriptor.get('a', 1.0)))
    except (TypeError, ValueError) as e:
        raise DescriptorError(f"invalid parameters for '{kind}': {e}")
    raise DescriptorError(f"unknown function kind '{kind}'")


def to_descriptor(f: SmoothCompactFunction) -> str:
    """Compact, key-sorted JSON descriptor."""
    return json.dumps(f.params, sort_keys=True, separators=(',', ':'), default=str)


def measure_integral(g: Callable, order: Order, support_radius: float, nodes: int = 64):
    """
    int_{-a}^{a} g(x) |x|^(2 alpha + 1) dx.

    The density is absorbed into a Gauss-Jacobi rule on each half-line, so g
    only needs to be smooth on each closed half.

    Args:
        g: Vectorized function; trailing output axes are kept
        order: Order alpha
        support_radius: a
        nodes: Nodes per half-line

    Returns:
        Integral value
    """
    order = as_order(order)
    a = float(support_radius)
    rule = gauss_jacobi_unit(nodes, 0.0, order.measure_exponent)
    factor = a ** (order.measure_exponent + 1.0)
    x = a * rule.nodes
    return factor * (rule.integrate(g(x)) + rule.integrate(g(-x)))


def weighted_l1_norm(f: SmoothCompactFunction, order: Order, nodes: int = 64) -> float:
    """
    ||f||_{1,alpha} = int |f(x)| |x|^(2 alpha + 1) dx.

    Args:
        f: Compactly supported function
        order: Order alpha
        nodes: Nodes per half-line (>= 16)
    """
    if nodes < 16:
        raise UsageError(f"weighted norm needs at least 16 nodes, got {nodes}")
    return float(np.real(measure_integral(lambda x: np.abs(f(x)), order, f.support_radius, nodes)))


def sup_seminorm(f: SmoothCompactFunction, n: int, samples: int = 401) -> float:
    """p_n(f) = max over p <= n of sup |f^(p)| sampled on [-a, a]."""
    grid = np.linspace(-f.support_radius, f.support_radius, samples)
    return max(float(np.max(np.abs(f(grid, p)))) for p in range(n + 1))


def check_k0_limits(g: SmoothCompactFunction, n_max: Optional[int] = None,
                    tol: float = K0_TOLERANCE) -> Tuple[OriginLimit, ...]:
    """
    Dyadic Cauchy test for the one-sided limits of y^n g^(n)(y) at 0.

    Samples y = +-2^-j, j = 10..20; the limit is accepted when the tail
    j >= 15 stays within tol (relative to max(1, |last value|)).

    Returns:
        One OriginLimit per (order, side)
    """
    n_max = g.max_derivative_order if n_max is None else min(n_max, g.max_derivative_order)
    records: List[OriginLimit] = []
    for n in range(n_max + 1):
        for side in (1, -1):
            ys = side * 2.0 ** -np.array(list(K0_DYADIC_RANGE), dtype=float)
            values = np.array([float(np.real(y ** n * g(y, n))) for y in ys])
            tail = values[K0_TAIL_START - K0_DYADIC_RANGE.start:]
            spread = float(np.max(np.abs(tail - values[-1])))
            converged = bool(np.all(np.isfinite(values))) and spread <= tol * max(1.0, abs(values[-1]))
            records.append(OriginLimit(side, n, float(values[-1]), spread, converged))
    failed = [r for r in records if not r.converged]
    if failed:
        logger.warning(f"K0 limit test failed for {len(failed)} of {len(records)} one-sided limits")
    return tuple(records)


def half_line_function(support_radius: float, max_order: int, evaluator: Callable,
                       smoothness_class: str = 'custom', params: Optional[Dict[str, Any]] = None,
                       check_limits: bool = False) -> HalfLineSmoothFunction:
    """Wrap a punctured-line callback, optionally attaching its K0 limit records."""
    g = HalfLineSmoothFunction(float(support_radius), int(max_order), evaluator, smoothness_class, params or {})
    if not check_limits:
        return g
    limits = check_k0_limits(g)
    return HalfLineSmoothFunction(
        g.support_radius, g.max_derivative_order, g.evaluator, g.smoothness_class, g.params, limits
    )


def measure(order: Order) -> WeightedMeasure:
    return WeightedMeasure(as_order(order))


def symmetric_grid(a: float, count: int, fraction: float = 0.95) -> np.ndarray:
    """Points in [-fraction a, fraction a] avoiding 0 by construction."""
    if count < 2 or count % 2:
        raise DomainError("symmetric grids need an even number of points")
    positive = np.linspace(fraction * a / (count // 2), fraction * a, count // 2)
    return np.concatenate([-positive[::-1], positive])


def is_even(f: SmoothCompactFunction, samples: int = 11, tol: float = 1e-12) -> bool:
    xs = np.linspace(0.0, f.support_radius, samples)
    return bool(np.max(np.abs(np.asarray(f(xs)) - np.asarray(f(-xs)))) <= tol)


__all__ = [
    'make_poly_bump',
    'make_odd_bump',
    'make_exp_bump',
    'make_custom',
    'zero_function',
    'reflect',
    'scale',
    'from_descriptor',
    'to_descriptor',
    'measure_integral',
    'weighted_l1_norm',
    'sup_seminorm',
    'check_k0_limits',
    'half_line_function',
    'measure',
    'symmetric_grid',
    'is_even',
]
