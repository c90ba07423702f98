"""
Transform service.

The Bessel-Struve transform F_BS f(z) = int f(x) S_{-iz}(x) |x|^(2 alpha+1) dx,
the Fourier transform F g(z) = int g(x) e^(-izx) dx, the factorization
F_BS = F o W_alpha, the Hankel transform on even functions, the duality
identity and transforms of finite Dirac combinations.
"""

from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy import special

from app.config import get_config
from app.errors import DomainError, EvennessError, WindowError
from app.logger import get_logger
from app.models.functions import SmoothCompactFunction
from app.models.order import Order, as_order
from app.models.run_config import GridSpec
from app.models.spectra import DiracCombination, SpectrumSample
from app.services.funcspace import is_even, to_descriptor
from app.services.intertwine import weyl_image
from app.services.kernel import effective_nodes, kernel_matrix, normalizing_constant
from app.services.numerics import dyadic_integral, gamma, gauss_jacobi_unit

logger = get_logger(__name__)

TRANSFORM_ROUTES = ('direct', 'factored')
EVENNESS_TOL = 1e-12


def _as_points(z) -> Tuple[np.ndarray, bool]:
    scalar = np.ndim(z) == 0
    return np.atleast_1d(np.asarray(z, dtype=complex)).ravel(), scalar


def _finish(values: np.ndarray, scalar: bool):
    return complex(values[0]) if scalar else values


def check_window(zs: np.ndarray, radius: float) -> None:
    """Reject points where e^(|Im z| a) leaves the resolvable range."""
    if zs.size == 0:
        return
    window = get_config().SERIES_WINDOW
    growth = float(np.max(np.abs(zs.imag))) * radius
    if growth > window:
        logger.warning(f"Transform window exceeded: |Im z| a = {growth:.6g} > {window}")
        raise WindowError(f"|Im z| * a = {growth:.6g} exceeds the window {window}")


def _measure_nodes(order: Order, radius: float, count: int) -> Tuple[np.ndarray, np.ndarray]:
    """Symmetric nodes and weights for int_{-a}^{a} h(x) |x|^(2 alpha+1) dx."""
    rule = gauss_jacobi_unit(count, 0.0, order.measure_exponent)
    x = radius * rule.nodes
    w = radius ** (order.measure_exponent + 1.0) * rule.weights
    return np.concatenate([x, -x]), np.concatenate([w, w])


def bs_transform_many(f: SmoothCompactFunction, order: Order, zs, nodes: Optional[int] = None) -> np.ndarray:
    """
    F_BS f at every z in zs by the direct route.

    The density is absorbed by a Gauss-Jacobi rule on each half-line and the
    kernel comes from its integral representation; both node counts grow with
    max |z| a.

    Args:
        f: Compactly supported function
        order: Order alpha
        zs: Array of complex spectral points
        nodes: Base node count

    Returns:
        Complex array shaped like zs

    Raises:
        WindowError: If |Im z| a exceeds the configured window
    """
    order = as_order(order)
    points = np.asarray(zs, dtype=complex)
    flat = points.ravel()
    a = f.support_radius
    check_window(flat, a)
    scale = float(np.max(np.abs(flat))) * a if flat.size else 0.0
    count = effective_nodes(nodes, scale)
    xs, ws = _measure_nodes(order, a, count)
    weighted = np.asarray(f(xs)) * ws
    kernel = kernel_matrix(order, -1j * flat, xs, 0, count)
    return (kernel @ weighted).reshape(points.shape)


def bs_transform(f: SmoothCompactFunction, order: Order, z: complex, nodes: Optional[int] = None) -> complex:
    """
    F_BS f(z) = int_{-a}^{a} f(x) S_{-iz}^alpha(x) |x|^(2 alpha+1) dx.

    Example:
        bs_transform(make_poly_bump(1, 2), 0.5, 0) -> 16/105
    """
    return complex(bs_transform_many(f, order, np.array([z]), nodes)[0])


def fourier(g: Callable, z, nodes: int = 16, support_radius: Optional[float] = None):
    """
    F g(z) = int g(x) e^(-izx) dx, no 2 pi factor.

    Integrated separately on each half-line over dyadic panels, so images of
    the Weyl integral with a corner or jump at 0 are handled.

    Args:
        g: Vectorized function supported in [-a, a]
        z: Point or array of points
        nodes: Minimum Gauss-Legendre nodes per panel
        support_radius: a, when g carries no support_radius

    Returns:
        Complex scalar or array
    """
    radius = support_radius if support_radius is not None else getattr(g, 'support_radius', None)
    if radius is None:
        raise DomainError("fourier needs a support radius")
    points, scalar = _as_points(z)
    oscillation = float(np.max(np.abs(points))) if points.size else 0.0

    def half(sign: float):
        def integrand(y: np.ndarray) -> np.ndarray:
            x = sign * y
            return np.asarray(g(x))[:, None] * np.exp(-1j * x[:, None] * points[None, :])
        return dyadic_integral(integrand, float(radius), nodes, oscillation=oscillation)

    return _finish(np.asarray(half(1.0) + half(-1.0), dtype=complex), scalar)


def bs_transform_factored(f: SmoothCompactFunction, order: Order, z, nodes: int = 64):
    """F_BS f(z) computed as F(W_alpha f)(z)."""
    points, scalar = _as_points(z)
    check_window(points, f.support_radius)
    image = weyl_image(f, order, nodes)
    return _finish(np.atleast_1d(fourier(image, points)), scalar)


def bs_transform_derivative(f: SmoothCompactFunction, order: Order, z, n: int, nodes: int = 64):
    """[F_BS f]^(n)(z) = F((-it)^n W_alpha f)(z)."""
    points, scalar = _as_points(z)
    check_window(points, f.support_radius)
    image = weyl_image(f, order, nodes)
    moment = lambda t: (-1j * t) ** n * image(t)
    return _finish(np.atleast_1d(fourier(moment, points, support_radius=f.support_radius)), scalar)


def normalized_bessel_j(order: Order, x) -> np.ndarray:
    """j_alpha(x) = Gamma(alpha+1) (2/x)^alpha J_alpha(x), with j_alpha(0) = 1."""
    order = as_order(order)
    x = np.asarray(x, dtype=float)
    safe = np.where(x == 0.0, 1.0, x)
    value = gamma(order.alpha + 1.0) * (2.0 / safe) ** order.alpha * special.jv(order.alpha, safe)
    return np.where(x == 0.0, 1.0, value)


def hankel(f: SmoothCompactFunction, order: Order, lam: float, nodes: Optional[int] = None) -> float:
    """
    H_alpha f(lambda) = int_0^a f(t) j_alpha(lambda t) t^(2 alpha+1) dt for even f.

    On even functions F_BS f = 2 H_alpha f.

    Raises:
        EvennessError: If f is not even at the sample points
    """
    order = as_order(order)
    if not is_even(f, tol=EVENNESS_TOL):
        raise EvennessError("the Hankel transform is defined for even functions")
    a = f.support_radius
    count = effective_nodes(nodes, abs(lam) * a)
    rule = gauss_jacobi_unit(count, 0.0, order.measure_exponent)
    t = a * rule.nodes
    values = np.asarray(f(t)) * normalized_bessel_j(order, lam * t)
    return float(np.real(a ** (order.measure_exponent + 1.0) * rule.integrate(values)))


def duality_check(f: SmoothCompactFunction, g: SmoothCompactFunction, order: Order,
                  nodes: Optional[int] = None) -> Tuple[complex, complex]:
    """
    Both sides of int F_BS(f) g dmu_alpha = int F_BS(g) f dmu_alpha.

    Returns:
        Tuple (lhs, rhs)
    """
    order = as_order(order)
    count = effective_nodes(nodes, f.support_radius * g.support_radius)

    def side(transformed: SmoothCompactFunction, weight: SmoothCompactFunction) -> complex:
        lams, ws = _measure_nodes(order, weight.support_radius, count)
        values = bs_transform_many(transformed, order, lams.astype(complex), count)
        return complex(np.sum(values * np.asarray(weight(lams)) * ws))

    return side(f, g), side(g, f)


def bs_transform_dirac(combination: DiracCombination, order: Order, z,
                       nodes: Optional[int] = None) -> Union[complex, np.ndarray]:
    """
    <T, S_{-iz}> = sum_j w_j (-1)^m_j S_{-iz}^(m_j)(x_j).

    Args:
        combination: Finite sum of weighted Dirac derivatives
        order: Order alpha
        z: Point or array of points
        nodes: Kernel rule size

    Raises:
        WindowError: If |Im z| b exceeds the configured window
    """
    order = as_order(order)
    points, scalar = _as_points(z)
    check_window(points, combination.support_bound)
    lams = -1j * points
    total = np.zeros(points.shape, dtype=complex)
    for term in combination.terms:
        m = term.derivative_order
        moment = kernel_matrix(order, lams, [term.location], m, nodes)[:, 0]
        total += term.weight * (-1.0) ** m * lams ** m * moment
    return _finish(total, scalar)


def chi_star_dirac_density(x0: float, order: Order) -> SmoothCompactFunction:
    """
    Density of chi*_alpha(delta_x0): (a_alpha / |x0|) (1 - s^2/x0^2)^(alpha-1/2)
    on the segment between 0 and x0.

    Its Fourier transform is S_{-iz}^alpha(x0), the transform of delta_x0.

    Raises:
        DomainError: At x0 = 0, where the image is delta_0 itself
    """
    order = as_order(order)
    x0 = float(x0)
    if x0 == 0.0:
        raise DomainError("chi* of delta_0 is delta_0, which has no density")
    lo, hi = min(0.0, x0), max(0.0, x0)
    constant = normalizing_constant(order) / abs(x0)

    def evaluate(s: np.ndarray, n: int) -> np.ndarray:
        inside = (s > lo) & (s < hi)
        ratio = np.where(inside, 1.0 - (s / x0) ** 2, 1.0)
        return np.where(inside, constant * ratio ** order.weight_exponent, 0.0)

    return SmoothCompactFunction(
        support_radius=abs(x0),
        max_derivative_order=0,
        evaluator=evaluate,
        smoothness_class='chi_star_dirac',
        params={'kind': 'chi_star_dirac', 'x0': x0, 'alpha': order.alpha},
    )


def spectrum_line(f: SmoothCompactFunction, order: Order, grid: Union[GridSpec, np.ndarray],
                  route: str = 'direct', nodes: Optional[int] = None) -> SpectrumSample:
    """
    Transform values on a real grid.

    Args:
        f: Compactly supported function
        order: Order alpha
        grid: GridSpec or array of real points
        route: 'direct' or 'factored'
        nodes: Node count

    Returns:
        SpectrumSample in grid order
    """
    order = as_order(order)
    if route not in TRANSFORM_ROUTES:
        raise DomainError(f"unknown transform route '{route}'")
    points = grid.points() if isinstance(grid, GridSpec) else np.asarray(grid, dtype=float)
    if route == 'direct':
        values = bs_transform_many(f, order, points.astype(complex), nodes)
    else:
        values = bs_transform_factored(f, order, points, nodes or get_config().DEFAULT_NODES)
    logger.debug(f"Spectrum line: {points.size} points, route {route}")
    return SpectrumSample(points, np.atleast_1d(values), order, to_descriptor(f), route, f.support_radius)


def decay_profile(f: SmoothCompactFunction, order: Order, lams, nodes: Optional[int] = None) -> np.ndarray:
    """|F_BS f(lambda)| on real lambda, the C_0 surrogate."""
    return np.abs(bs_transform_many(f, order, np.asarray(lams, dtype=complex), nodes))


__all__ = [
    'bs_transform',
    'bs_transform_many',
    'fourier',
    'bs_transform_factored',
    'bs_transform_derivative',
    'normalized_bessel_j',
    'hankel',
    'duality_check',
    'bs_transform_dirac',
    'chi_star_dirac_density',
    'spectrum_line',
    'decay_profile',
    'check_window',
]
