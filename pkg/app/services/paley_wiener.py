"""
Paley-Wiener service.

Complex-plane scans of Bessel-Struve transforms, growth envelope fits for
functions (C e^(a|z|)) and Dirac combinations (c (1+|z|^2)^(m/2) e^(b|Im z|)),
and the identities that characterize the transform images.
"""

import math
from typing import Optional, Tuple, Union

import numpy as np

from app.config import get_config
from app.errors import CapError, DegenerateError, DomainError, OrderError, WindowError
from app.logger import get_logger
from app.models.functions import SmoothCompactFunction
from app.models.order import Order, as_order
from app.models.run_config import ComplexGrid
from app.models.spectra import DiracCombination, EnvelopeFit, SpectrumSample
from app.services.funcspace import to_descriptor
from app.services.intertwine import weyl_image
from app.services.kernel import effective_nodes, kernel_matrix
from app.services.numerics import dyadic_integral, gauss_jacobi_unit
from app.services.transforms import bs_transform, bs_transform_dirac, bs_transform_many, fourier

logger = get_logger(__name__)

Source = Union[SmoothCompactFunction, DiracCombination]

FIT_MIN_SAMPLES = 100
FIT_MIN_RADIUS = 10.0
SHELL_INNER_RADIUS = 5.0
FIT_SHELLS = 12
TYPE_STEP = 0.05
MAX_POLY_ORDER = 12
ENVELOPE_SLACK = 0.05
TYPE_RATE_SLACK = 0.5 * TYPE_STEP
MAX_FINITE_PART_ORDER = 4
TINY = 1e-300


def _radius_of(source: Source) -> float:
    if isinstance(source, DiracCombination):
        return source.support_bound
    return source.support_radius


def transform_values(source: Source, order: Order, zs, nodes: Optional[int] = None) -> np.ndarray:
    """F_BS of a function or a Dirac combination at every z."""
    zs = np.asarray(zs, dtype=complex)
    if isinstance(source, DiracCombination):
        return np.asarray(bs_transform_dirac(source, order, zs, nodes), dtype=complex).reshape(zs.shape)
    return bs_transform_many(source, order, zs, nodes)


def complex_scan(source: Source, order: Order, grid: ComplexGrid, nodes: Optional[int] = None,
                 pool=None) -> SpectrumSample:
    """
    Transform values on a rectangle, row-major with re outer and im inner.

    Args:
        source: Compactly supported function or Dirac combination
        order: Order alpha
        grid: Rectangle of spectral points
        nodes: Node count
        pool: Optional pool with map_ordered(fn, items, desc) evaluating rows

    Raises:
        WindowError: If R a or B a exceeds the configured window
    """
    order = as_order(order)
    radius = _radius_of(source)
    window = get_config().SERIES_WINDOW
    for label, extent in (('re', grid.re_extent), ('im', grid.im_extent)):
        if extent * radius > window:
            logger.warning(f"Scan window exceeded on {label}: {extent * radius:.6g} > {window}")
            raise WindowError(f"{label} extent {extent} times support {radius} exceeds the window {window}")
    rows = [re + 1j * grid.im.points() for re in grid.re.points()]
    if pool is None:
        values = [transform_values(source, order, row, nodes) for row in rows]
    else:
        values = pool.map_ordered(lambda row: transform_values(source, order, row, nodes), rows, desc='scan')
    descriptor = source.describe() if isinstance(source, DiracCombination) else to_descriptor(source)
    return SpectrumSample(np.concatenate(rows), np.concatenate(values), order, descriptor, 'direct', radius)


def _log_abs(values: np.ndarray) -> np.ndarray:
    magnitude = np.abs(values)
    return np.where(magnitude > TINY, np.log(np.maximum(magnitude, TINY)), -np.inf)


def _shell_maxima(z: np.ndarray, g: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Radius and value of the largest finite g in each shell between 5 and the inscribed radius."""
    r = np.abs(z)
    inscribed = min(float(np.max(np.abs(z.real))), float(np.max(np.abs(z.imag))))
    edges = np.linspace(SHELL_INNER_RADIUS, max(inscribed, SHELL_INNER_RADIUS), FIT_SHELLS + 1)
    radii, maxima = [], []
    for edge_lo, edge_hi in zip(edges[:-1], edges[1:]):
        mask = (r >= edge_lo) & (r <= edge_hi) & np.isfinite(g)
        if np.any(mask):
            best = np.argmax(np.where(mask, g, -np.inf))
            radii.append(float(r[best]))
            maxima.append(float(g[best]))
    return np.array(radii), np.array(maxima)


def type_growth_rate(samples: SpectrumSample, a: float) -> float:
    """
    Residual exponential growth rate of max(log|F(z)| - a|z|) over |z| >= 5.

    Shell maxima are fitted by c + d r + s log r + q / r and d is returned;
    algebraic factors r^s never count as exponential growth. With fewer than
    four shells the rate compares the outer half of the samples against the
    inner half.
    """
    z = samples.points
    g = _log_abs(samples.values) - a * np.abs(z)
    radii, maxima = _shell_maxima(z, g)
    if radii.size >= 4:
        design = np.column_stack([np.ones_like(radii), radii, np.log(radii), 1.0 / radii])
        coefficients, *_ = np.linalg.lstsq(design, maxima, rcond=None)
        return float(coefficients[1])
    r = np.abs(z)
    finite = np.isfinite(g) & (r >= SHELL_INNER_RADIUS)
    if not np.any(finite):
        return math.inf
    r_mid = 0.5 * (SHELL_INNER_RADIUS + float(np.max(r[finite])))
    inner, outer = finite & (r <= r_mid), finite & (r > r_mid)
    if not np.any(inner) or not np.any(outer):
        return math.inf
    return float((np.max(g[outer]) - np.max(g[inner])) / max(r_mid - SHELL_INNER_RADIUS, TYPE_STEP))


def type_is_stabilized(samples: SpectrumSample, a: float) -> bool:
    """True when log|F(z)| - a|z| stops growing on |z| >= 5, within half a grid step."""
    return type_growth_rate(samples, a) <= TYPE_RATE_SLACK


def fit_exponential_type(samples: SpectrumSample, support_radius: Optional[float] = None) -> EnvelopeFit:
    """
    Fit |F(z)| <= C e^(a|z|) over a complex sample set.

    Candidates a = 0, 0.05, ... up to 2 support are tried in order and the
    first one for which max(log|F| - a|z|) over |z| >= 5 is stabilized wins.
    C is the smallest constant majorizing every sample.

    Raises:
        DomainError: With fewer than 100 samples or max |z| < 10
        DegenerateError: If every sample vanishes
    """
    z, values = samples.points, samples.values
    if z.size < FIT_MIN_SAMPLES or float(np.max(np.abs(z))) < FIT_MIN_RADIUS:
        raise DomainError(f"exponential type fit needs >= {FIT_MIN_SAMPLES} samples reaching |z| >= {FIT_MIN_RADIUS}")
    logs = _log_abs(values)
    finite = np.isfinite(logs)
    if not np.any(finite):
        raise DegenerateError("all transform samples vanish; no exponential type to fit")
    support = support_radius if support_radius is not None else samples.support_radius
    r = np.abs(z)
    if support > 0:
        upper = 2.0 * support
    else:
        positive = finite & (r > 0)
        upper = max(float(np.max(logs[positive] / r[positive])), 0.0) if np.any(positive) else 0.0
    candidates = np.round(np.arange(0.0, upper + 0.5 * TYPE_STEP, TYPE_STEP), 10)
    a, stabilized, tested = float(candidates[-1]), False, 0
    for candidate in candidates:
        tested += 1
        if type_is_stabilized(samples, float(candidate)):
            a, stabilized = float(candidate), True
            break
    if not stabilized:
        logger.warning(f"No exponential type up to {upper:.2f} stabilizes; reporting the upper end")
    log_c = float(np.max(logs[finite] - a * r[finite]))
    residual = float(np.max(logs[finite] - log_c - a * r[finite]))
    rate = type_growth_rate(samples, a)
    logger.debug(f"Exponential type fit: a {a:.2f} after {tested} candidates, rate {rate:.4f}, log C {log_c:.4f}")
    return EnvelopeFit('exp_type', math.exp(log_c), a=a, residual=residual,
                       extras={'growth_rate': rate, 'stabilized': stabilized, 'candidates': tested})


def schwartz_envelope_check(combination: DiracCombination, order: Order, grid: ComplexGrid,
                            nodes: Optional[int] = None, pool=None,
                            sample: Optional[SpectrumSample] = None) -> EnvelopeFit:
    """
    Fit |F_BS T(z)| <= c (1+|z|^2)^(m/2) e^(b|Im z|) for a Dirac combination.

    A candidate (m, b) passes when g = log|F| - (m/2) log(1+|z|^2) - b|Im z|
    does not grow from the inner shell [5, r_mid] to the outer shell
    (r_mid, r_max] by more than 0.05. The smallest m, then the smallest b on
    the 0.05 grid, wins; c makes the bound majorize every sample. The
    residual against e^(b Im z) without the modulus is kept in extras.
    A precomputed scan of the combination may be passed as sample.

    Raises:
        DegenerateError: If every sample vanishes
        CapError: If no m <= 12 passes
    """
    order = as_order(order)
    if sample is None:
        sample = complex_scan(combination, order, grid, nodes, pool)
    z, logs = sample.points, _log_abs(sample.values)
    if not np.any(np.isfinite(logs)):
        raise DegenerateError("all transform samples vanish")
    r = np.abs(z)
    r_max = float(np.max(r))
    if r_max <= SHELL_INNER_RADIUS:
        raise DomainError(f"the envelope fit needs samples beyond |z| = {SHELL_INNER_RADIUS}")
    r_mid = 0.5 * (SHELL_INNER_RADIUS + r_max)
    finite = np.isfinite(logs)
    inner = finite & (r >= SHELL_INNER_RADIUS) & (r <= r_mid)
    outer = finite & (r > r_mid)
    if not np.any(inner) or not np.any(outer):
        raise DomainError("the envelope fit needs finite samples in both shells")
    polynomial = 0.5 * np.log1p(r * r)
    b_max = max(2.0 * combination.support_bound, 1.0)
    b_grid = np.round(np.arange(0.0, b_max + 0.5 * TYPE_STEP, TYPE_STEP), 10)
    for m in range(MAX_POLY_ORDER + 1):
        for b in b_grid:
            g = logs - m * polynomial - b * np.abs(z.imag)
            if np.max(g[outer]) <= np.max(g[inner]) + ENVELOPE_SLACK:
                log_c = float(np.max(g[finite]))
                literal = logs - log_c - m * polynomial - b * z.imag
                literal_residual = float(np.max(literal[finite]))
                logger.debug(f"Schwartz envelope: m={m}, b={b:.2f}, literal residual {literal_residual:.4g}")
                return EnvelopeFit(
                    'poly_exp', math.exp(log_c), m=m, b=float(b),
                    residual=float(np.max(g[finite]) - log_c),
                    extras={'literal_residual': literal_residual,
                            'literal_majorizes': bool(literal_residual <= 1e-9)},
                )
    logger.warning(f"No polynomial order up to {MAX_POLY_ORDER} bounds {combination.describe()}")
    raise CapError(f"no envelope with m <= {MAX_POLY_ORDER} majorizes the transform")


def truncated_exponential(w, k: int) -> np.ndarray:
    """e^w - sum_{n<k} w^n / n!, by its series where |w| <= 1."""
    w = np.asarray(w, dtype=complex)
    direct = np.exp(w) - sum(w ** n / math.factorial(n) for n in range(k))
    series = np.zeros_like(w)
    term = w ** k / math.factorial(k)
    for n in range(k, k + 30):
        series = series + term
        term = term * w / (n + 1)
    return np.where(np.abs(w) <= 1.0, series, direct)


def finite_part_identity(f: SmoothCompactFunction, order: Order, k: int, z: complex,
                         nodes: int = 64) -> Tuple[complex, complex]:
    """
    Both sides of (iz)^k F_BS f(z) = int (W_alpha f)^(k)(x) (e^(-izx) - sum_{n<k} (-izx)^n/n!) dx.

    The right side is integrated on each half-line separately.

    Returns:
        Tuple (lhs, rhs)
    """
    order = as_order(order)
    if not 1 <= k <= MAX_FINITE_PART_ORDER:
        raise OrderError(f"finite-part order must lie in 1..{MAX_FINITE_PART_ORDER}, got {k}")
    z = complex(z)
    lhs = (1j * z) ** k * bs_transform(f, order, z, nodes)
    image = weyl_image(f, order, nodes)

    def integrand(x: np.ndarray) -> np.ndarray:
        return np.asarray(image(x, k)) * truncated_exponential(-1j * z * x, k)

    a = f.support_radius
    rhs = dyadic_integral(integrand, a, oscillation=abs(z)) + dyadic_integral(lambda y: integrand(-y), a, oscillation=abs(z))
    return complex(lhs), complex(rhs)


def lambda_half_check(f: SmoothCompactFunction, z: complex, nodes: int = 64) -> Tuple[complex, complex]:
    """
    Both sides of F_BS^(1/2) f(z) = (h'(z) - h'(0)) / z, h = F(-f).

    h' = F(x -> i x f(x)) by differentiation under the integral; h'(0) is the
    moment i int x f(x) dx.

    Raises:
        DomainError: At z = 0
    """
    z = complex(z)
    if z == 0:
        raise DomainError("the Lambda_1/2 identity is checked at z != 0")
    lhs = bs_transform(f, 0.5, z, nodes)
    moment = lambda x: 1j * x * np.asarray(f(x))
    h_prime = fourier(moment, np.array([z, 0.0]), support_radius=f.support_radius)
    return complex(lhs), complex((h_prime[0] - h_prime[1]) / z)


def order_recurrence_check(f: SmoothCompactFunction, order: Order, z: complex,
                           nodes: Optional[int] = None) -> Tuple[complex, complex]:
    """
    Both sides of F_BS^alpha f(z) = alpha (h'(z) - h'(0)) / z, h = F_BS^(alpha-1)(-2 f).

    h' is analytic: d/dz S_{-iz}^(alpha-1)(x) = -i x times the t-weighted kernel moment.

    Raises:
        OrderError: If alpha <= 1/2
        DomainError: At z = 0
    """
    order = as_order(order)
    if order.alpha <= 0.5:
        raise OrderError(f"the order recurrence needs alpha > 1/2, got {order.alpha}")
    z = complex(z)
    if z == 0:
        raise DomainError("the order recurrence is checked at z != 0")
    lower = order.lowered()
    lhs = bs_transform(f, order, z, nodes)
    a = f.support_radius
    count = effective_nodes(nodes, abs(z) * a)
    rule = gauss_jacobi_unit(count, 0.0, lower.measure_exponent)
    x = a * rule.nodes
    xs = np.concatenate([x, -x])
    ws = a ** (lower.measure_exponent + 1.0) * np.concatenate([rule.weights, rule.weights])
    moments = kernel_matrix(lower, np.array([-1j * z, 0.0]), xs, 1, count)
    weighted = -2.0 * np.asarray(f(xs)) * (-1j * xs) * ws
    h_prime = moments @ weighted
    return complex(lhs), complex(order.alpha * (h_prime[0] - h_prime[1]) / z)


def paley_wiener_constant(f: SmoothCompactFunction, order: Order, k: int = 0, nodes: int = 64) -> float:
    """
    int |x^k (W_alpha f)^(k)(x)| dx / k!, with |F_BS f(z)| <= constant e^(a|z|) for z != 0.
    """
    order = as_order(order)
    if not 0 <= k <= MAX_FINITE_PART_ORDER:
        raise OrderError(f"Paley-Wiener constant order must lie in 0..{MAX_FINITE_PART_ORDER}, got {k}")
    image = weyl_image(f, order, nodes)
    h = lambda x: np.abs(x ** k * np.asarray(image(x, k)))
    a = f.support_radius
    total = dyadic_integral(h, a) + dyadic_integral(lambda y: h(-y), a)
    return float(total) / math.factorial(k)


def imaginary_axis_growth(source: Source, order: Order, ys, nodes: Optional[int] = None) -> np.ndarray:
    """log|F(iy)| / y along the imaginary axis; tends to the exponential type."""
    ys = np.asarray(ys, dtype=float)
    if np.any(ys <= 0):
        raise DomainError("growth is sampled at y > 0")
    values = transform_values(source, order, 1j * ys, nodes)
    return _log_abs(values) / ys


def cauchy_riemann_residual(source: Source, order: Order, points, h: float = 1e-3,
                            nodes: Optional[int] = None) -> float:
    """
    Max over points of |dF/dy - i dF/dx| / |dF/dx| by centered differences.
    """
    z = np.atleast_1d(np.asarray(points, dtype=complex))
    stencil = np.concatenate([z + h, z - h, z + 1j * h, z - 1j * h])
    values = transform_values(source, order, stencil, nodes).reshape(4, z.size)
    dx = (values[0] - values[1]) / (2.0 * h)
    dy = (values[2] - values[3]) / (2.0 * h)
    scale = np.maximum(np.abs(dx), TINY)
    return float(np.max(np.abs(dy - 1j * dx) / scale))


def conjugate_symmetry_residual(f: SmoothCompactFunction, order: Order, zs,
                                nodes: Optional[int] = None) -> float:
    """Max of |conj F(z) - F(-conj z)| / (1 + |F(z)|) for real f."""
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    values = bs_transform_many(f, order, zs, nodes)
    mirrored = bs_transform_many(f, order, -np.conj(zs), nodes)
    return float(np.max(np.abs(np.conj(values) - mirrored) / (1.0 + np.abs(values))))


__all__ = [
    'transform_values',
    'complex_scan',
    'fit_exponential_type',
    'type_growth_rate',
    'type_is_stabilized',
    'schwartz_envelope_check',
    'truncated_exponential',
    'finite_part_identity',
    'lambda_half_check',
    'order_recurrence_check',
    'paley_wiener_constant',
    'imaginary_axis_growth',
    'cauchy_riemann_residual',
    'conjugate_symmetry_residual',
]
