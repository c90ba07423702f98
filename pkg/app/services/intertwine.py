"""
Intertwining service.

The intertwining operator chi_alpha and its inverse, the Weyl integral
W_alpha with its derivatives, the inverse V_alpha, the iterated operator
(d/dx^2)^p = (1/(2x) d/dx)^p and the duality pairings between them.

Functions passed in are (x, n) callbacks returning the n-th derivative on
numpy arrays; SmoothCompactFunction instances qualify.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from app.errors import DomainError, OrderError, SmoothnessError
from app.logger import get_logger
from app.models.functions import HalfLineSmoothFunction, SmoothCompactFunction
from app.models.order import Order, as_order
from app.models.spectra import Dx2Expansion
from app.services.funcspace import half_line_function, measure_integral, symmetric_grid
from app.services.kernel import normalizing_constant
from app.services.numerics import (
    dyadic_integral,
    gamma,
    gauss_jacobi_left,
    gauss_jacobi_unit,
    graded_jacobi_integral,
    richardson_derivative,
)

logger = get_logger(__name__)

MAX_DX2_POWER = 12


@lru_cache(maxsize=None)
def exact_beta(p: int, m: int) -> Tuple[Fraction, ...]:
    """beta_i^p with (d/dx^2)^p (x^m g) = sum_i beta_i^p x^(m - 2p + i) g^(i), as fractions."""
    if not 0 <= p <= MAX_DX2_POWER:
        raise OrderError(f"(d/dx^2)^p is tabulated for 0 <= p <= {MAX_DX2_POWER}, got {p}")
    if p == 0:
        return (Fraction(1),)
    previous = exact_beta(p - 1, m)
    q = p - 1
    half = Fraction(1, 2)
    current = [half * previous[0] * (m - 2 * q)]
    for i in range(1, p):
        current.append(half * (m + i - 2 * q) * previous[i] + half * previous[i - 1])
    current.append(half * previous[q])
    return tuple(current)


def coefficients_beta(p: int, m: int) -> Tuple[float, ...]:
    """
    Coefficients beta_i^p, i = 0..p, of the expansion of (d/dx^2)^p (x^m g).

    Args:
        p: Power of d/dx^2, 0..12
        m: Integer exponent of the monomial factor

    Returns:
        Tuple of p + 1 floats
    """
    return tuple(float(c) for c in exact_beta(int(p), int(m)))


def dx2_coefficients(p: int) -> Dx2Expansion:
    """(d/dx^2)^p f = sum_i gamma_i x^(i - 2p) f^(i); gamma_0 = 0 unless p = 0."""
    return Dx2Expansion(int(p), exact_beta(int(p), 0))


def _values(f: Callable, x, n: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(f(x, n)), np.shape(x))


def _pointwise(fn: Callable[[float], complex], x):
    """Apply a scalar routine over a scalar or an array of points."""
    if np.ndim(x) == 0:
        return np.asarray(fn(float(x))).item()
    arr = np.asarray(x, dtype=float)
    out = np.array([np.asarray(fn(float(v))).item() for v in arr.ravel()])
    return out.reshape(arr.shape)


def _check_budget(f: Callable, needed: int, what: str) -> None:
    budget = getattr(f, 'max_derivative_order', None)
    if budget is not None and budget < needed:
        raise SmoothnessError(f"{what} needs derivatives to order {needed}, the function provides {budget}")


def _falling(c: float, j: int) -> float:
    value = 1.0
    for i in range(j):
        value *= c - i
    return value


def inverse_constant(order: Order) -> float:
    """2 sqrt(pi) / (Gamma(alpha + 1) Gamma(1/2 - r)) of the general branch."""
    return 2.0 * math.sqrt(math.pi) / (gamma(order.alpha + 1.0) * gamma(0.5 - order.r))


def half_integer_constant(order: Order) -> float:
    """2^(2k+1) k! / (2k+1)!."""
    k = order.k
    return 2.0 ** (2 * k + 1) * math.factorial(k) / math.factorial(2 * k + 1)


def chi_derivative(f: Callable, order: Order, x, n: int = 0, nodes: int = 64):
    """
    (chi_alpha f)^(n)(x) = a_alpha int_0^1 (1-t^2)^(alpha-1/2) t^n f^(n)(x t) dt.

    Args:
        f: Derivative callback (x, n)
        order: Order alpha
        x: Point or array of points
        n: Derivative order
        nodes: Jacobi rule size

    Returns:
        Scalar or array matching x
    """
    order = as_order(order)
    rule = gauss_jacobi_left(nodes, order.weight_exponent)
    t = rule.nodes
    smooth = rule.weights * (1.0 + t) ** order.weight_exponent * t ** n
    arr = np.asarray(x, dtype=float)
    values = _values(f, arr[..., None] * t, n)
    out = normalizing_constant(order) * (values @ smooth)
    return out.item() if np.ndim(out) == 0 else out


def chi(f: Callable, order: Order, x, nodes: int = 64):
    """chi_alpha f(x) = a_alpha int_0^1 (1-t^2)^(alpha-1/2) f(x t) dt."""
    return chi_derivative(f, order, x, 0, nodes)


def chi_inverse(f: Callable, order: Order, x, nodes: int = 64):
    """
    chi_alpha^-1 f(x) for x != 0.

    Half-integer branch: c x (d/dx^2)^(k+1) (x^(2k+1) f), with
    c = 2^(2k+1) k! / (2k+1)!. General branch: after t = x u the inner
    integral int_0^x (x^2-t^2)^(-r-1/2) |t|^(2 alpha+1) f(t) dt equals
    x^(2k+1) J(x), J(x) = int_0^1 (1-u^2)^(-r-1/2) u^(2 alpha+1) f(x u) du,
    so the same expansion applies with J in place of f.

    Raises:
        DomainError: At x = 0
        SmoothnessError: If f lacks derivatives to order k + 1
    """
    order = as_order(order)
    p = order.k + 1
    _check_budget(f, p, 'chi inverse')
    beta = coefficients_beta(p, 2 * order.k + 1)

    if order.half_integer:
        constant = half_integer_constant(order)

        def jets(v: float):
            return [_values(f, np.array(v), i) for i in range(p + 1)]
    else:
        constant = inverse_constant(order)
        singular = -order.r - 0.5
        rule = gauss_jacobi_unit(nodes, singular, order.measure_exponent)
        u = rule.nodes
        smooth = rule.weights * (1.0 + u) ** singular

        def jets(v: float):
            return [(_values(f, v * u, i) * u ** i) @ smooth for i in range(p + 1)]

    def evaluate(v: float):
        if v == 0.0:
            raise DomainError("chi inverse is evaluated at x != 0 only")
        derivatives = jets(v)
        return constant * sum(b * v ** i * derivatives[i] for i, b in enumerate(beta))

    return _pointwise(evaluate, x)


def weyl_jet(f: Callable, order: Order, y: float, n: int, nodes: int = 64) -> np.ndarray:
    """
    (W_alpha f)^(j)(y) for j = 0..n at a single y != 0.

    With I_k = a_alpha int_|y|^a (x^2-y^2)^(alpha-1/2) x^(k+1) f^(k)(sgn(y) x) dx,
    (W f)^(j)(y) = |y|^-j sum_k C(j,k) (2 alpha+1)_(j-k) sgn(y)^(j-k) I_k,
    where (c)_i is the falling factorial.
    """
    order = as_order(order)
    y = float(y)
    if y == 0.0:
        raise DomainError("the Weyl integral is defined on the punctured line")
    budget = getattr(f, 'max_derivative_order', None)
    if budget is not None and n > budget:
        raise OrderError(f"Weyl derivative of order {n} exceeds the derivative budget {budget}")
    a = float(getattr(f, 'support_radius', np.inf))
    if not math.isfinite(a):
        raise DomainError("the Weyl integral needs a compactly supported input")
    ay, sign = abs(y), math.copysign(1.0, y)
    if ay >= a:
        return np.zeros(n + 1)
    beta = order.weight_exponent

    def integrand(x: np.ndarray) -> np.ndarray:
        columns = [x ** (k + 1) * _values(f, sign * x, k) for k in range(n + 1)]
        return ((x + ay) ** beta)[:, None] * np.stack(columns, axis=-1)

    moments = normalizing_constant(order) * graded_jacobi_integral(integrand, ay, a, beta, nodes)
    c = order.measure_exponent
    jet = np.empty(n + 1, dtype=moments.dtype)
    for j in range(n + 1):
        total = sum(math.comb(j, k) * _falling(c, j - k) * sign ** (j - k) * moments[k] for k in range(j + 1))
        jet[j] = total / ay ** j
    return jet


def weyl(f: Callable, order: Order, y, nodes: int = 64):
    """
    W_alpha f(y) = a_alpha int_|y|^a (x^2-y^2)^(alpha-1/2) x f(sgn(y) x) dx.

    Zero for |y| >= a.

    Raises:
        DomainError: At y = 0
    """
    return _pointwise(lambda v: weyl_jet(f, order, v, 0, nodes)[0], y)


def weyl_derivative(f: Callable, order: Order, y, n: int, nodes: int = 64):
    """n-th derivative of W_alpha f at y != 0."""
    return _pointwise(lambda v: weyl_jet(f, order, v, n, nodes)[n], y)


class WeylImageEvaluator:
    """(y, n) callback for W_alpha f; jet() returns all orders up to p at once."""

    def __init__(self, source: Callable, order: Order, nodes: int = 64):
        self.source = source
        self.order = as_order(order)
        self.nodes = nodes

    def jet(self, y, p: int) -> np.ndarray:
        arr = np.asarray(y, dtype=float)
        rows = [weyl_jet(self.source, self.order, v, p, self.nodes) for v in arr.ravel()]
        return np.stack(rows).reshape(arr.shape + (p + 1,))

    def __call__(self, y, n: int) -> np.ndarray:
        return self.jet(y, n)[..., n]


def weyl_image(f: SmoothCompactFunction, order: Order, nodes: int = 64,
               check_limits: bool = False) -> HalfLineSmoothFunction:
    """W_alpha f as a function on the punctured line with derivatives from weyl_jet."""
    order = as_order(order)
    return half_line_function(
        f.support_radius,
        f.max_derivative_order,
        WeylImageEvaluator(f, order, nodes),
        smoothness_class='weyl_image',
        params={'kind': 'weyl_image', 'alpha': order.alpha, 'source': dict(f.params)},
        check_limits=check_limits,
    )


def jet(g: Callable, y, p: int) -> np.ndarray:
    """g^(i)(y), i = 0..p, stacked on a trailing axis."""
    evaluator = getattr(g, 'evaluator', None)
    if isinstance(evaluator, WeylImageEvaluator):
        return evaluator.jet(y, p)
    return np.stack([_values(g, y, i) for i in range(p + 1)], axis=-1)


def dx2_apply(g: Callable, y, p: int) -> np.ndarray:
    """(d/dy^2)^p g at y != 0."""
    y = np.asarray(y, dtype=float)
    derivatives = jet(g, y, p)
    return dx2_coefficients(p).apply(np.moveaxis(derivatives, -1, 0), y)


def weyl_origin_jump(f: SmoothCompactFunction, order: Order, nodes: int = 64) -> float:
    """W f(0+) - W f(0-) = a_alpha int_0^a x^(2 alpha) (f(x) - f(-x)) dx."""
    order = as_order(order)
    a = f.support_radius
    rule = gauss_jacobi_unit(nodes, 0.0, 2.0 * order.alpha)
    x = a * rule.nodes
    odd_part = np.asarray(f(x)) - np.asarray(f(-x))
    return float(np.real(normalizing_constant(order) * a ** (2.0 * order.alpha + 1.0) * rule.integrate(odd_part)))


def v_alpha(g: Callable, order: Order, x, nodes: int = 64):
    """
    V_alpha g(x), the inverse of W_alpha, for x != 0.

    Half-integer branch: (-1)^(k+1) (2^(2k+1) k! / (2k+1)!) (d/dx^2)^(k+1) g(x).
    General branch: c_1 int_|x|^a (y^2-x^2)^(-r-1/2) [(d/dy^2)^(k+1) g](sgn(x) y) y dy
    with c_1 = (-1)^(k+1) 2 sqrt(pi) / (Gamma(alpha+1) Gamma(1/2-r)).

    Args:
        g: Function on the punctured line with derivatives to order k + 1
        order: Order alpha
        x: Point or array of points, nonzero
        nodes: Jacobi panel size

    Raises:
        DomainError: At x = 0
    """
    order = as_order(order)
    p = order.k + 1
    _check_budget(g, p, 'V_alpha')
    sign_factor = (-1.0) ** p
    a = float(getattr(g, 'support_radius', np.inf))

    if order.half_integer:
        constant = sign_factor * half_integer_constant(order)

        def evaluate(v: float):
            if v == 0.0:
                raise DomainError("V_alpha is evaluated at x != 0 only")
            if abs(v) >= a:
                return 0.0
            return constant * dx2_apply(g, v, p).item()

        return _pointwise(evaluate, x)

    if not math.isfinite(a):
        raise DomainError("V_alpha on the general branch needs a compactly supported input")
    constant = sign_factor * inverse_constant(order)
    singular = -order.r - 0.5

    def evaluate(v: float):
        if v == 0.0:
            raise DomainError("V_alpha is evaluated at x != 0 only")
        ax, sign = abs(v), math.copysign(1.0, v)
        if ax >= a:
            return 0.0

        def integrand(y: np.ndarray) -> np.ndarray:
            return (y + ax) ** singular * y * dx2_apply(g, sign * y, p)

        return constant * graded_jacobi_integral(integrand, ax, a, singular, nodes)

    return _pointwise(evaluate, x)


def _line_integral(h: Callable, a: float, nodes: int = 16):
    """int_{-a}^{a} h(x) dx for h smooth on each closed half-line."""
    return dyadic_integral(h, a, nodes) + dyadic_integral(lambda y: h(-y), a, nodes)


def chi_star_pairing(f: Callable, g: SmoothCompactFunction, order: Order,
                     nodes: int = 64) -> Tuple[complex, complex]:
    """
    Both sides of int chi_alpha f g A dx = int f W_alpha g dx.

    Returns:
        Tuple (lhs, rhs)
    """
    order = as_order(order)
    a = g.support_radius
    lhs = measure_integral(lambda x: chi(f, order, x, nodes) * np.asarray(g(x)), order, a, nodes)
    image = weyl_image(g, order, nodes)
    rhs = _line_integral(lambda x: _values(f, x, 0) * image(x), a, nodes)
    return complex(lhs), complex(rhs)


def v_w_duality(f_image: HalfLineSmoothFunction, g: SmoothCompactFunction, order: Order,
                nodes: int = 32) -> Tuple[complex, complex]:
    """
    Both sides of int V_alpha f g A dx = int f chi_alpha^-1 g dx for f in the W-image.

    Returns:
        Tuple (lhs, rhs)
    """
    order = as_order(order)
    radius = min(f_image.support_radius, g.support_radius)
    lhs = measure_integral(lambda x: v_alpha(f_image, order, x, nodes) * np.asarray(g(x)), order, radius, nodes)
    rhs = _line_integral(lambda x: f_image(x) * chi_inverse(g, order, x, nodes), f_image.support_radius, nodes)
    return complex(lhs), complex(rhs)


def seminorm_rho(g: Callable, order: Order, n: int, samples: int = 200, points=None) -> float:
    """
    rho_n(g) = max over p <= n of sup |D^p (d/dx^2)^(k+1) g| on a grid avoiding 0.

    Defined on the half-integer branch; for g = W_alpha f it equals
    p_n(f) (2k+1)! / (2^(2k+1) k!).

    Raises:
        OrderError: Off the half-integer branch or beyond the derivative budget
    """
    order = as_order(order)
    if not order.half_integer:
        raise OrderError("the rho seminorms are defined for half-integer alpha")
    q = order.k + 1
    budget = getattr(g, 'max_derivative_order', None)
    if budget is not None and q + n > budget:
        raise OrderError(f"rho_{n} needs derivatives to order {q + n}, the function provides {budget}")
    if points is None:
        points = symmetric_grid(g.support_radius, samples, fraction=1.0)
    x = np.asarray(points, dtype=float)
    derivatives = jet(g, x, q + n)
    gammas = dx2_coefficients(q).coefficients
    best = 0.0
    for p in range(n + 1):
        total = 0.0
        for i, coefficient in enumerate(gammas):
            if not coefficient:
                continue
            power = i - 2 * q
            for j in range(p + 1):
                total = total + (coefficient * math.comb(p, j) * _falling(power, j)
                                 * x ** (power - j) * derivatives[..., i + p - j])
        best = max(best, float(np.max(np.abs(total))))
    return best


def seminorm_q(g: Callable, order: Order, n: int, samples: int = 20, points=None,
               nodes: int = 64) -> float:
    """
    q_n(g) = max over p <= n of sup |D^p (|x|^(1-2r) (d/dx^2)^(k+1) Phi g)| with
    Phi g(x) = int_1^inf (t^2-1)^(-r-1/2) g(x t) t dt.

    The inner quantity is V_alpha g / c_1, so it is evaluated through v_alpha;
    D^p for p >= 1 comes from Richardson differences. Defined on the general
    branch; for g = W_alpha f it equals p_n(f) Gamma(alpha+1) Gamma(1/2-r) / (2 sqrt(pi)).

    Raises:
        OrderError: On the half-integer branch or for n > 6
    """
    order = as_order(order)
    if order.half_integer:
        raise OrderError("the q seminorms are defined off the half-integer branch")
    if not 0 <= n <= 6:
        raise OrderError(f"q_n is computed for n in 0..6, got {n}")
    if points is None:
        points = symmetric_grid(g.support_radius, samples)
    x = np.asarray(points, dtype=float)
    scale = 1.0 / inverse_constant(order)

    def reduced(v: float) -> float:
        return float(np.real(v_alpha(g, order, v, nodes))) * scale

    best = float(np.max(np.abs(np.asarray(v_alpha(g, order, x, nodes)) * scale)))
    for p in range(1, n + 1):
        derivatives = [richardson_derivative(reduced, float(v), p)[0] for v in x]
        best = max(best, float(np.max(np.abs(derivatives))))
    return best


def weyl_l1_bound_constant(order: Order, nodes: int = 64) -> float:
    """
    a_alpha int_1^inf (t^2-1)^(alpha-1/2) t^(-2 alpha-1) dt.

    After t = 1/s the integral becomes int_0^1 (1-s^2)^(alpha-1/2) ds.
    """
    order = as_order(order)
    rule = gauss_jacobi_left(nodes, order.weight_exponent)
    integral = rule.integrate((1.0 + rule.nodes) ** order.weight_exponent)
    return float(normalizing_constant(order) * integral)


def weyl_l1_norm(f: SmoothCompactFunction, order: Order, nodes: int = 64) -> float:
    """int |W_alpha f(y)| dy."""
    image = weyl_image(f, order, nodes)
    return float(_line_integral(lambda y: np.abs(image(y)), f.support_radius, nodes))


__all__ = [
    'coefficients_beta',
    'dx2_coefficients',
    'dx2_apply',
    'chi',
    'chi_derivative',
    'chi_inverse',
    'weyl',
    'weyl_jet',
    'weyl_derivative',
    'weyl_image',
    'weyl_origin_jump',
    'jet',
    'v_alpha',
    'chi_star_pairing',
    'v_w_duality',
    'seminorm_rho',
    'seminorm_q',
    'weyl_l1_bound_constant',
    'weyl_l1_norm',
    'WeylImageEvaluator',
]
