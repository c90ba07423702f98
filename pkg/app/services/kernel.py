"""
Bessel-Struve kernel service.

Normalized Bessel and Struve series, the kernel
S_lambda^alpha(x) = j_alpha(i lambda x) - i h_alpha(i lambda x) by its series
and by its integral representation, x-derivatives of the kernel and the
Bessel-Struve differential operator.
"""

import math
from typing import Callable, Optional, Tuple

import numpy as np

from app.config import get_config
from app.errors import DomainError, OrderError, PrecisionLossError, SizeError
from app.logger import get_logger
from app.models.order import Order, as_order
from app.models.spectra import KernelPoint, KernelRoute
from app.services.numerics import gamma, gauss_jacobi_left, richardson_derivative

logger = get_logger(__name__)

EPS = np.finfo(float).eps
MAX_KERNEL_DERIVATIVE = 12
MIN_INTEGRAL_NODES = 8
ROUTES = ('auto', 'series', 'integral')

# evaluator(x, n) -> n-th derivative at x
ScalarEvaluator = Callable[[float, int], complex]


def normalizing_constant(order: Order) -> float:
    """a_alpha = 2 Gamma(alpha + 1) / (sqrt(pi) Gamma(alpha + 1/2))."""
    order = as_order(order)
    return 2.0 * gamma(order.alpha + 1.0) / (math.sqrt(math.pi) * gamma(order.alpha + 0.5))


def kernel_initial_slope(order: Order, lam: complex) -> complex:
    """u'(0) = lambda Gamma(alpha + 1) / (sqrt(pi) Gamma(alpha + 3/2))."""
    order = as_order(order)
    return complex(lam) * gamma(order.alpha + 1.0) / (math.sqrt(math.pi) * gamma(order.alpha + 1.5))


def _check_window(z: complex) -> None:
    window = get_config().SERIES_WINDOW
    if abs(z) > window:
        logger.warning(f"Series argument |z|={abs(z):.6g} exceeds window {window}")
        raise PrecisionLossError(
            f"series argument |z|={abs(z):.6g} exceeds {window}; use the integral route"
        )


def _sum_series(first: complex, ratio: Callable[[int], complex]) -> Tuple[complex, float]:
    """Sum terms t_0 = first, t_n = t_{n-1} * ratio(n); returns (sum, sum of |terms|)."""
    config = get_config()
    term = first
    total = first
    magnitude = abs(first)
    for n in range(1, config.SERIES_MAX_TERMS):
        term = term * ratio(n)
        total += term
        magnitude += abs(term)
        if term == 0 or abs(term) <= config.SERIES_REL_TOL * abs(total):
            break
    return total, magnitude


def _bessel_series(alpha: float, z: complex) -> Tuple[complex, float]:
    if z == 0:
        return 1.0 + 0.0j, 1.0
    w = (z / 2.0) ** 2
    return _sum_series(1.0 + 0.0j, lambda n: -w / (n * (n + alpha)))


def _struve_series(alpha: float, z: complex) -> Tuple[complex, float]:
    if z == 0:
        return 0.0j, 0.0
    w = (z / 2.0) ** 2
    first = gamma(alpha + 1.0) * (z / 2.0) / (gamma(1.5) * gamma(alpha + 1.5))
    return _sum_series(first, lambda n: -w / ((n + 0.5) * (n + alpha + 0.5)))


def bessel_j_norm(order: Order, z: complex) -> complex:
    """
    Normalized Bessel function j_alpha(z) = Gamma(alpha+1) sum (-1)^n (z/2)^(2n) / (n! Gamma(n+alpha+1)).

    Raises:
        PrecisionLossError: If |z| exceeds the series window
    """
    order = as_order(order)
    z = complex(z)
    _check_window(z)
    return _bessel_series(order.alpha, z)[0]


def struve_h_norm(order: Order, z: complex) -> complex:
    """
    Normalized Struve function
    h_alpha(z) = Gamma(alpha+1) sum (-1)^n (z/2)^(2n+1) / (Gamma(n+3/2) Gamma(n+alpha+3/2)).

    Raises:
        PrecisionLossError: If |z| exceeds the series window
    """
    order = as_order(order)
    z = complex(z)
    _check_window(z)
    return _struve_series(order.alpha, z)[0]


def kernel_series(order: Order, lam: complex, x: complex) -> KernelPoint:
    """
    S_lambda^alpha(x) from the Bessel and Struve series.

    Args:
        order: Order alpha
        lam: Spectral parameter lambda
        x: Point (real or complex)

    Returns:
        KernelPoint with route series; est_error bounds the rounding of the
        summed terms
    """
    order = as_order(order)
    lam, x = complex(lam), complex(x)
    if lam == 0 or x == 0:
        return KernelPoint(order, lam, x, 1.0 + 0.0j, KernelRoute.SERIES, 0.0)
    z = 1j * lam * x
    _check_window(z)
    j_value, j_mass = _bessel_series(order.alpha, z)
    h_value, h_mass = _struve_series(order.alpha, z)
    value = j_value - 1j * h_value
    return KernelPoint(order, lam, x, value, KernelRoute.SERIES, 4.0 * EPS * (j_mass + h_mass))


def effective_nodes(nodes: Optional[int], scale: float) -> int:
    """Node count raised to resolve e^(lambda x t) when |lambda x| = scale is large."""
    config = get_config()
    requested = config.DEFAULT_NODES if nodes is None else int(nodes)
    needed = max(requested, int(math.ceil(scale)) + 32)
    effective = min(needed, max(config.MAX_NODES, requested))
    if effective != requested:
        logger.debug(f"Raised quadrature nodes {requested} -> {effective} for |lambda x|={scale:.4g}")
    return effective


def kernel_matrix(order: Order, lams, xs, n: int = 0, nodes: Optional[int] = None,
                  auto_raise: bool = True) -> np.ndarray:
    """
    a_alpha int_0^1 (1-t^2)^(alpha-1/2) t^n exp(lambda x t) dt on a lambda-by-x grid.

    Args:
        order: Order alpha
        lams: Array of spectral parameters
        xs: Array of points
        n: Power of t (derivative moment)
        nodes: Base node count
        auto_raise: Raise the node count with max |lambda x|

    Returns:
        Complex array of shape (len(lams), len(xs))
    """
    order = as_order(order)
    lams = np.atleast_1d(np.asarray(lams, dtype=complex))
    xs = np.atleast_1d(np.asarray(xs, dtype=complex))
    scale = float(np.max(np.abs(lams))) * float(np.max(np.abs(xs))) if lams.size and xs.size else 0.0
    count = effective_nodes(nodes, scale) if auto_raise else int(nodes)
    rule = gauss_jacobi_left(count, order.weight_exponent)
    t = rule.nodes
    smooth = rule.weights * (1.0 + t) ** order.weight_exponent * t ** n
    out = np.empty((lams.size, xs.size), dtype=complex)
    chunk = max(1, 2_000_000 // max(1, xs.size * t.size))
    for start in range(0, lams.size, chunk):
        block = lams[start:start + chunk]
        phase = np.exp(block[:, None, None] * xs[None, :, None] * t[None, None, :])
        out[start:start + chunk] = phase @ smooth
    return normalizing_constant(order) * out


def kernel_values(order: Order, lam: complex, xs, nodes: Optional[int] = None) -> np.ndarray:
    """S_lambda^alpha at every x in xs by the integral route."""
    arr = np.asarray(xs)
    return kernel_matrix(order, [lam], arr.ravel(), 0, nodes)[0].reshape(arr.shape)


def kernel_integral(order: Order, lam: complex, x: complex, nodes: Optional[int] = None) -> KernelPoint:
    """
    S_lambda^alpha(x) from the integral representation
    a_alpha int_0^1 (1-t^2)^(alpha-1/2) e^(lambda x t) dt.

    The (1-t)^(alpha-1/2) factor is absorbed by a Gauss-Jacobi rule and the
    smooth (1+t)^(alpha-1/2) factor multiplies the integrand.

    Args:
        order: Order alpha
        lam: Spectral parameter
        x: Point
        nodes: Node count (>= 8); raised to about |lambda x| + 32 when larger

    Returns:
        KernelPoint with route integral; est_error is the change from the
        half-size rule
    """
    order = as_order(order)
    if nodes is not None and nodes < MIN_INTEGRAL_NODES:
        raise SizeError(f"the integral route needs at least {MIN_INTEGRAL_NODES} nodes, got {nodes}")
    lam, x = complex(lam), complex(x)
    count = effective_nodes(nodes, abs(lam * x))
    if lam == 0 or x == 0:
        return KernelPoint(order, lam, x, 1.0 + 0.0j, KernelRoute.INTEGRAL, 0.0, count)
    value = complex(kernel_matrix(order, [lam], [x], 0, count)[0, 0])
    coarse = complex(kernel_matrix(order, [lam], [x], 0, count // 2, auto_raise=False)[0, 0])
    return KernelPoint(order, lam, x, value, KernelRoute.INTEGRAL, abs(value - coarse), count)


def cancellation_loss(lam: complex, x: complex) -> float:
    """Natural-log estimate of the cancellation in the series at lambda x."""
    product = complex(lam) * complex(x)
    return abs(product) - max(product.real, 0.0)


def evaluate_kernel(order: Order, lam: complex, x: complex, route: str = 'auto',
                    nodes: Optional[int] = None) -> KernelPoint:
    """
    Evaluate the kernel by the requested route.

    'auto' picks the series while its cancellation stays within the
    configured budget and the integral representation otherwise.
    """
    if route not in ROUTES:
        raise DomainError(f"unknown kernel route '{route}'")
    if route == 'series':
        return kernel_series(order, lam, x)
    if route == 'integral':
        return kernel_integral(order, lam, x, nodes)
    config = get_config()
    product = abs(complex(lam) * complex(x))
    if product <= config.SERIES_WINDOW and cancellation_loss(lam, x) <= config.AUTO_SERIES_LOSS:
        return kernel_series(order, lam, x)
    logger.debug(f"Kernel route auto -> integral at |lambda x|={product:.4g}")
    return kernel_integral(order, lam, x, nodes)


def kernel_derivative(order: Order, lam: complex, x: float, n: int, nodes: Optional[int] = None) -> complex:
    """
    n-th x-derivative of S_lambda^alpha at x:
    a_alpha lambda^n int_0^1 (1-t^2)^(alpha-1/2) t^n e^(lambda x t) dt.

    Args:
        order: Order alpha
        lam: Spectral parameter
        x: Real point
        n: Derivative order, 0..12
        nodes: Node count

    Returns:
        Complex derivative value
    """
    if not 0 <= n <= MAX_KERNEL_DERIVATIVE:
        raise OrderError(f"kernel derivative order must lie in 0..{MAX_KERNEL_DERIVATIVE}, got {n}")
    lam = complex(lam)
    moment = kernel_matrix(order, [lam], [x], n, nodes)[0, 0]
    return complex(lam ** n * moment)


def kernel_evaluator(order: Order, lam: complex, nodes: Optional[int] = None) -> ScalarEvaluator:
    """Analytic derivative callback for x -> S_lambda^alpha(x)."""
    return lambda x, n: kernel_derivative(order, lam, x, n, nodes)


def numeric_evaluator(g: Callable[[float], complex], h0: Optional[float] = None) -> ScalarEvaluator:
    """Derivative callback for a plain function, falling back on Richardson differences."""

    def evaluate(x: float, n: int) -> complex:
        if n == 0:
            return g(x)
        estimate, indicator = richardson_derivative(g, x, n, h0)
        logger.debug(f"Richardson derivative order {n} at x={x}: indicator {indicator:.3g}")
        return estimate

    return evaluate


def apply_bessel_struve_op(f: ScalarEvaluator, order: Order, x: float) -> complex:
    """
    l_alpha f(x) = f''(x) + ((2 alpha + 1) / x) (f'(x) - f'(0)).

    Args:
        f: Derivative callback (x, n) -> f^(n)(x)
        order: Order alpha
        x: Nonzero real point

    Raises:
        DomainError: At x = 0
    """
    order = as_order(order)
    if x == 0:
        raise DomainError("the Bessel-Struve operator is evaluated at x != 0 only")
    return f(x, 2) + (order.measure_exponent / x) * (f(x, 1) - f(0.0, 1))
