"""
Numerical substrate.

Gamma function, Gauss-Legendre and Gauss-Jacobi quadrature, integration
against algebraic endpoint singularities and Richardson-extrapolated
central differences. Everything here is pure; quadrature rules are cached
and immutable.
"""

import math
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial import legendre
from scipy.linalg import eigh_tridiagonal

from app.errors import InvalidExponentError, PoleError, SizeError
from app.logger import get_logger
from app.models.quadrature import QuadratureRule

logger = get_logger(__name__)

MAX_RULE_SIZE = 512

# Lanczos approximation (g = 6.024680040776729583740234375, 13 terms), scaled by exp(g)
LANCZOS_G = 6.024680040776729583740234375
LANCZOS_NUM = np.array([
    0.006061842346248906525783753964555936883222,
    0.5098416655656676188125178644804694509993,
    19.51992788247617482847860966235652136208,
    449.9445569063168119446858607650988409623,
    6955.999602515376140356310115515198987526,
    75999.29304014542649875303443598909137092,
    601859.6171681098786670226533699352302507,
    3481712.15498064590882071018964774556468,
    14605578.08768506808414169982791359218571,
    43338889.32467613834773723740590533316085,
    86363131.28813859145546927288977868422342,
    103794043.1163445451906271053616070238554,
    56906521.91347156388090791033559122686859,
])
LANCZOS_DEN = np.array([
    1.0, 66.0, 1925.0, 32670.0, 357423.0, 2637558.0, 13339535.0,
    45995730.0, 105258076.0, 150917976.0, 120543840.0, 39916800.0, 0.0,
])


def _lanczos_sum_expg_scaled(x: float) -> float:
    if x > 1.0:
        # Evaluate in 1/x to keep the powers bounded
        y = 1.0 / x
        return float(np.polyval(LANCZOS_NUM[::-1], y) / np.polyval(LANCZOS_DEN[::-1], y))
    return float(np.polyval(LANCZOS_NUM, x) / np.polyval(LANCZOS_DEN, x))


def gamma(x: float) -> float:
    """
    Gamma function by the Lanczos approximation with reflection.

    Args:
        x: Real argument, not a non-positive integer

    Returns:
        Gamma(x)

    Raises:
        PoleError: At 0, -1, -2, ...
    """
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    zgh = (x + LANCZOS_G - 0.5) / math.e
    half_power = zgh ** ((x - 0.5) / 2.0)
    return _lanczos_sum_expg_scaled(x) * half_power * half_power


def beta_function(p: float, q: float) -> float:
    """B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q)."""
    return gamma(p) * gamma(q) / gamma(p + q)


def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_RULE_SIZE:
        raise SizeError(f"quadrature size must lie in 1..{MAX_RULE_SIZE}, got {n}")


def _check_exponent(value: float, name: str) -> None:
    if not value > -1.0:
        raise InvalidExponentError(f"{name} must exceed -1, got {value}")


def _jacobi_recurrence(n: int, a: float, b: float) -> Tuple[np.ndarray, np.ndarray]:
    """Monic Jacobi recurrence for the weight (1-x)^a (1+x)^b on (-1, 1)."""
    diag = np.empty(n)
    offdiag_sq = np.empty(max(n - 1, 0))
    ab = a + b
    diag[0] = (b - a) / (ab + 2.0)
    if n > 1:
        i = np.arange(1, n, dtype=float)
        diag[1:] = (b * b - a * a) / ((2.0 * i + ab) * (2.0 * i + ab + 2.0))
        offdiag_sq[0] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) ** 2 * (3.0 + ab))
        if n > 2:
            i = np.arange(2, n, dtype=float)
            s = 2.0 * i + ab
            offdiag_sq[1:] = 4.0 * i * (i + a) * (i + b) * (i + ab) / (s * s * (s + 1.0) * (s - 1.0))
    return diag, offdiag_sq


@lru_cache(maxsize=256)
def gauss_jacobi(n: int, a: float, b: float) -> QuadratureRule:
    """
    Gauss-Jacobi rule on (-1, 1) for the weight (1-x)^a (1+x)^b (Golub-Welsch).

    Args:
        n: Number of nodes (1..512)
        a: Exponent at x = 1
        b: Exponent at x = -1

    Returns:
        QuadratureRule with the weight absorbed
    """
    _check_size(n)
    _check_exponent(a, 'jacobi exponent a')
    _check_exponent(b, 'jacobi exponent b')
    mu0 = 2.0 ** (a + b + 1.0) * gamma(a + 1.0) * gamma(b + 1.0) / gamma(a + b + 2.0)
    diag, offdiag_sq = _jacobi_recurrence(n, a, b)
    if n == 1:
        nodes, weights = diag.copy(), np.array([mu0])
    else:
        nodes, vectors = eigh_tridiagonal(diag, np.sqrt(offdiag_sq))
        weights = mu0 * vectors[0, :] ** 2
    return QuadratureRule(nodes, weights, (-1.0, 1.0), left_exponent=a, lower_exponent=b)


@lru_cache(maxsize=64)
def gauss_legendre(n: int) -> QuadratureRule:
    """Gauss-Legendre rule on (-1, 1), 1 <= n <= 512."""
    _check_size(n)
    nodes, weights = legendre.leggauss(n)
    return QuadratureRule(nodes, weights, (-1.0, 1.0))


@lru_cache(maxsize=256)
def gauss_jacobi_unit(n: int, beta: float, gamma_exponent: float = 0.0) -> QuadratureRule:
    """Rule on (0, 1) for the weight (1-t)^beta t^gamma_exponent."""
    base = gauss_jacobi(n, beta, gamma_exponent)
    scale = 2.0 ** -(beta + gamma_exponent + 1.0)
    return QuadratureRule(
        0.5 + 0.5 * base.nodes,
        scale * base.weights,
        (0.0, 1.0),
        left_exponent=beta,
        lower_exponent=gamma_exponent,
    )


def gauss_jacobi_left(n: int, beta: float) -> QuadratureRule:
    """
    Rule on (0, 1) for the weight (1-t)^beta.

    Args:
        n: Number of nodes
        beta: Exponent of (1 - t), must exceed -1

    Returns:
        QuadratureRule reproducing int_0^1 (1-t)^beta p(t) dt for deg p <= 2n - 1
    """
    if n < 1:
        raise SizeError(f"quadrature size must be positive, got {n}")
    _check_exponent(beta, 'beta')
    return gauss_jacobi_unit(n, float(beta), 0.0)


@lru_cache(maxsize=64)
def unit_legendre(n: int) -> QuadratureRule:
    """Gauss-Legendre rule mapped to (0, 1)."""
    base = gauss_legendre(n)
    return QuadratureRule(0.5 + 0.5 * base.nodes, 0.5 * base.weights, (0.0, 1.0))


def legendre_integral(h: Callable, lo: float, hi: float, nodes: int):
    """int_lo^hi h(y) dy with an n-node Gauss-Legendre rule."""
    if hi <= lo:
        return 0.0
    rule = unit_legendre(nodes)
    width = hi - lo
    return width * rule.integrate(lambda t: h(lo + width * t))


def graded_jacobi_integral(h: Callable, lo: float, hi: float, beta: float, nodes: int):
    """
    int_lo^hi (y - lo)^beta h(y) dy for h smooth on [lo, hi].

    h may carry a singularity at -lo (factors such as (y + lo)^c); a Jacobi
    panel on [lo, 2 lo] is followed by dyadic Gauss-Legendre panels so the
    near singularity never sits close to a panel relative to its width.

    Args:
        h: Vectorized integrand; the leading axis of its output follows y
        lo: Lower limit, lo >= 0
        hi: Upper limit
        beta: Endpoint exponent (> -1)
        nodes: Jacobi panel size; Legendre panels use max(16, nodes // 2)

    Returns:
        Integral value (array when h returns trailing axes)
    """
    _check_exponent(beta, 'beta')
    if hi <= lo:
        return 0.0
    first_hi = hi if lo <= 0.0 or hi <= 2.0 * lo else 2.0 * lo
    rule = gauss_jacobi_unit(nodes, 0.0, float(beta))
    width = first_hi - lo
    total = width ** (beta + 1.0) * rule.integrate(lambda s: h(lo + width * s))
    panel_nodes = max(16, nodes // 2)
    left = first_hi
    while left < hi:
        right = min(2.0 * left, hi)
        if right - left <= 1e-15 * hi:
            break
        total = total + legendre_integral(lambda y: _with_weight((y - lo) ** beta, h(y)), left, right, panel_nodes)
        left = right
    return total


def dyadic_integral(h: Callable, a: float, nodes: int = 16, levels: int = 24, oscillation: float = 0.0):
    """
    int_0^a h(y) dy on panels [a 2^-(j+1), a 2^-j] plus [0, a 2^-levels].

    Suited to integrands smooth on (0, a] with a non-analytic corner at 0.
    Panels resolving e^(i w y) get extra nodes, w = oscillation.
    """
    if a <= 0:
        return 0.0
    edges = a * 2.0 ** -np.arange(levels + 1, dtype=float)
    total = 0.0
    for right, left in zip(edges[:-1], edges[1:]):
        width = right - left
        count = nodes
        if oscillation:
            count = min(MAX_RULE_SIZE, max(nodes, int(math.ceil(0.5 * oscillation * width)) + 24))
        total = total + legendre_integral(h, left, right, count)
    return total + legendre_integral(h, 0.0, edges[-1], nodes)


def _with_weight(weight: np.ndarray, values) -> np.ndarray:
    values = np.asarray(values)
    return weight.reshape(weight.shape + (1,) * (values.ndim - 1)) * values


@lru_cache(maxsize=32)
def central_stencil(order: int) -> Tuple[Tuple[int, ...], Tuple[float, ...]]:
    """Offsets and weights of the second-order central difference for f^(order)."""
    half = (order + 1) // 2
    offsets = np.arange(-half, half + 1)
    powers = np.vander(offsets, increasing=True).T.astype(float)
    rhs = np.zeros(offsets.size)
    rhs[order] = math.factorial(order)
    coefficients = np.linalg.solve(powers, rhs)
    return tuple(int(o) for o in offsets), tuple(float(c) for c in coefficients)


def _central_difference(f: Callable, x: float, order: int, h: float):
    offsets, coefficients = central_stencil(order)
    total = 0.0
    for offset, coefficient in zip(offsets, coefficients):
        if coefficient != 0.0:
            total = total + coefficient * f(x + offset * h)
    return total / h ** order


DEFAULT_STEPS = {1: 0.01, 2: 0.02, 3: 0.05, 4: 0.08, 5: 0.12, 6: 0.16}


def richardson_derivative(f: Callable, x: float, order: int = 1, h0: float = None):
    """
    f^(order)(x) by central differences with two Richardson levels.

    The stencil stays inside [x - 2 h0, x + 2 h0]. Works for complex-valued f.

    Args:
        f: Scalar function
        x: Evaluation point
        order: Derivative order, 1..6
        h0: Base step (order-dependent default)

    Returns:
        Tuple (estimate, error indicator)
    """
    if not 1 <= order <= 6:
        raise SizeError(f"richardson derivative order must lie in 1..6, got {order}")
    if h0 is None:
        h0 = DEFAULT_STEPS[order]
    if not h0 > 0:
        raise SizeError(f"step must be positive, got {h0}")
    half = (order + 1) // 2
    h = 2.0 * h0 / half
    d1 = _central_difference(f, x, order, h)
    d2 = _central_difference(f, x, order, h / 2.0)
    d3 = _central_difference(f, x, order, h / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    estimate = (16.0 * r2 - r1) / 15.0
    return estimate, float(np.max(np.abs(estimate - r2)))
