"""Property registry holding the numerical verification suites."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy import special

from app.errors import BesselStruveError, UsageError
from app.logger import LoggerAdapter, get_logger
from app.models.order import as_order
from app.models.run_config import ComplexGrid
from app.models.spectra import DiracCombination
from app.services import funcspace, intertwine, kernel, numerics, paley_wiener, transforms

logger = get_logger(__name__)

SUITES = ("numerics", "kernel", "funcspace", "intertwine", "transforms", "paley-wiener")

# runner() -> (residual, detail)
Runner = Callable[[], Tuple[float, Dict[str, Any]]]


@dataclass
class PropertyResult:
    """Outcome of one property run."""

    name: str
    suite: str
    residual: float
    tolerance: float
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def to_serialisable(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "suite": self.suite,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class PropertySpec:
    """A named numerical property with its tolerance."""

    name: str
    suite: str
    description: str
    tolerance: float
    runner: Runner

    def run(self, tol: Optional[float] = None) -> PropertyResult:
        tolerance = self.tolerance if tol is None else float(tol)
        log = LoggerAdapter(logger, {"suite": self.suite, "property": self.name})
        started = time.time()
        try:
            residual, detail = self.runner()
            residual = float(residual)
        except BesselStruveError as exc:
            log.warning(f"Property raised {type(exc).__name__}: {exc}")
            residual, detail = math.inf, {"error": f"{type(exc).__name__}: {exc}"}
        except Exception as exc:
            log.error(f"Property crashed with {type(exc).__name__}: {exc}", exc_info=exc)
            residual, detail = math.inf, {"error": f"{type(exc).__name__}: {exc}"}
        passed = bool(math.isfinite(residual) and residual <= tolerance)
        if not passed:
            log.warning(f"Residual {residual:.3e} exceeds tolerance {tolerance:.1e}")
        else:
            log.debug(f"Residual {residual:.3e} within {tolerance:.1e}")
        return PropertyResult(self.name, self.suite, residual, tolerance, passed, detail, time.time() - started)


class PropertyRegistry:
    """Registry storing the verification properties by suite."""

    def __init__(self) -> None:
        self._properties: Dict[str, PropertySpec] = {}

    def register(self, spec: PropertySpec) -> None:
        self._properties[spec.name] = spec

    def list(self, suite: str = "all") -> List[PropertySpec]:
        if suite != "all" and suite not in SUITES:
            raise UsageError(f"unknown suite '{suite}'; choose from {', '.join(SUITES + ('all',))}")
        specs = [spec for spec in self._properties.values() if suite == "all" or spec.suite == suite]
        return sorted(specs, key=lambda spec: (SUITES.index(spec.suite), spec.name))

    def get(self, name: str) -> PropertySpec:
        if name not in self._properties:
            raise KeyError(f"Unknown property '{name}'")
        return self._properties[name]

    def run_suite(self, suite: str = "all", tol: Optional[float] = None, pool=None) -> List[PropertyResult]:
        specs = self.list(suite)
        if pool is None:
            return [spec.run(tol) for spec in specs]
        return pool.map_ordered(lambda spec: spec.run(tol), specs, desc=f"verify {suite}")

    def serialise(self, suite: str = "all") -> List[Dict[str, Any]]:
        return [
            {
                "name": spec.name,
                "suite": spec.suite,
                "description": spec.description,
                "tolerance": spec.tolerance,
            }
            for spec in self.list(suite)
        ]

    def __len__(self) -> int:
        return len(self._properties)


property_registry = PropertyRegistry()


def _pair(lhs: complex, rhs: complex) -> float:
    return abs(complex(lhs) - complex(rhs)) / (1.0 + abs(complex(lhs)))


def _outside(value: float, lo: float, hi: float) -> float:
    return max(0.0, lo - value, value - hi)


def _standard_bumps():
    return [funcspace.make_poly_bump(1.0, 4), funcspace.make_poly_bump(2.0, 5)]


# ---------------------------------------------------------------------------
# numerics
# ---------------------------------------------------------------------------

def _quadrature_moments():
    worst = 0.0
    for beta in (-0.7, -0.2, 0.0, 0.8, 2.0):
        for n in (4, 8, 16):
            rule = numerics.gauss_jacobi_left(n, beta)
            for m in range(2 * n):
                exact = numerics.beta_function(m + 1.0, beta + 1.0)
                worst = max(worst, abs(rule.integrate(rule.nodes ** m) - exact) / exact)
    return worst, {"rules": 15}


def _gamma_recurrence():
    xs = np.round(np.arange(1, 101) * 0.1, 12)
    worst = max(abs(numerics.gamma(x + 1.0) - x * numerics.gamma(x)) / numerics.gamma(x + 1.0) for x in xs)
    return worst, {"points": int(xs.size)}


def _gamma_accuracy():
    xs = np.linspace(0.1, 50.0, 200)
    worst = max(abs(numerics.gamma(x) - special.gamma(x)) / special.gamma(x) for x in xs)
    return worst, {"points": int(xs.size)}


def _jacobi_doubling():
    worst = 0.0
    for beta in (-0.5, 0.3, 1.7):
        coarse = numerics.gauss_jacobi_left(16, beta).integrate(np.exp)
        fine = numerics.gauss_jacobi_left(32, beta).integrate(np.exp)
        worst = max(worst, abs(coarse - fine))
    return worst, {}


def _richardson_examples():
    cube, _ = numerics.richardson_derivative(lambda t: t ** 3, 1.0, 2)
    third, _ = numerics.richardson_derivative(math.exp, 0.0, 3)
    return max(abs(cube - 6.0), abs(third - 1.0)), {"t^3''(1)": cube, "exp'''(0)": third}


# ---------------------------------------------------------------------------
# kernel
# ---------------------------------------------------------------------------

KERNEL_ALPHAS = (-0.3, 0.0, 0.5, 1.0, 1.5, 2.5)
KERNEL_LAMBDAS = (1.0, -1.0, 2j, -2j, 1.0 + 1j)


def _route_consistency():
    worst = 0.0
    count = 0
    for alpha in KERNEL_ALPHAS:
        for lam in KERNEL_LAMBDAS:
            for x in np.linspace(-3.0, 3.0, 25):
                series = kernel.kernel_series(alpha, lam, x).value
                integral = kernel.kernel_integral(alpha, lam, x, 64).value
                worst = max(worst, abs(series - integral))
                count += 1
    return worst, {"points": count}


def _kernel_symmetry():
    axis = np.linspace(-1.0, 1.0, 5)
    grid = (axis[:, None] + 1j * axis[None, :]).ravel()
    worst = 0.0
    for alpha in (0.3, 1.5):
        for lam in (0.7 - 0.3j, 1.2 + 0.5j):
            for z in grid:
                left = kernel.kernel_series(alpha, -1j * lam, z).value
                right = kernel.kernel_series(alpha, -1j * z, lam).value
                worst = max(worst, abs(left - right))
    return worst, {"points": int(grid.size) * 4}


def _kernel_reflection():
    axis = np.linspace(-1.0, 1.0, 5)
    grid = (axis[:, None] + 1j * axis[None, :]).ravel()
    worst = 0.0
    for alpha in (0.3, 1.5):
        for lam in (0.7 - 0.3j, 1.2 + 0.5j):
            for z in grid:
                left = kernel.kernel_series(alpha, -lam, z).value
                right = kernel.kernel_series(alpha, lam, -z).value
                worst = max(worst, abs(left - right))
    return worst, {}


def _kernel_boundedness():
    rng = np.random.default_rng(20240611)
    worst = 0.0
    for _ in range(100):
        alpha = float(rng.uniform(-0.4, 3.0))
        lam = float(rng.uniform(-10.0, 10.0))
        x = float(rng.uniform(-3.0, 3.0))
        value = kernel.evaluate_kernel(alpha, 1j * lam, x).value
        worst = max(worst, abs(value) - 1.0)
    return max(worst, 0.0), {"pairs": 100}


def _kernel_decay():
    value = abs(kernel.evaluate_kernel(0.5, -100j, 1.0).value)
    return max(0.0, value - 0.02), {"abs_value": value}


def _eigenfunction_residual():
    worst = 0.0
    count = 0
    for alpha in (0.0, 0.5, 0.8, 1.5, 2.5):
        for lam in (1.5, -1.0, 2j, 1.0 + 1j):
            evaluator = kernel.kernel_evaluator(alpha, lam)
            for x in (0.3, 0.6, -0.9):
                applied = kernel.apply_bessel_struve_op(evaluator, alpha, x)
                expected = lam ** 2 * evaluator(x, 0)
                worst = max(worst, abs(applied - expected) / (1.0 + abs(lam) ** 2))
                count += 1
    return worst, {"triples": count}


def _closed_form_half():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(50):
        lam = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        x = float(rng.uniform(0.1, 2.0)) * (1 if rng.uniform() < 0.5 else -1)
        w = lam * x
        expected = np.expm1(w) / w
        worst = max(worst, abs(kernel.evaluate_kernel(0.5, lam, x).value - expected))
    return worst, {"points": 50}


def _initial_slope():
    worst = 0.0
    for alpha in KERNEL_ALPHAS:
        for lam in KERNEL_LAMBDAS:
            derivative = kernel.kernel_derivative(alpha, lam, 0.0, 1)
            worst = max(worst, abs(derivative - kernel.kernel_initial_slope(alpha, lam)))
    return worst, {}


# ---------------------------------------------------------------------------
# funcspace
# ---------------------------------------------------------------------------

def _builtin_functions():
    return [
        funcspace.make_poly_bump(1.0, 2),
        funcspace.make_poly_bump(2.0, 5),
        funcspace.make_odd_bump(1.0, 3),
    ]


def _derivative_consistency():
    worst = 0.0
    for f in _builtin_functions():
        points = np.linspace(-0.8, 0.8, 20) * f.support_radius
        for n in range(1, f.max_derivative_order + 1):
            for x in points:
                estimate, _ = numerics.richardson_derivative(lambda t: f(t, n - 1), float(x), 1)
                exact = f(float(x), n)
                worst = max(worst, abs(estimate - exact) / max(1.0, abs(exact)))
    bump = funcspace.make_exp_bump(1.0)
    for n in range(1, bump.max_derivative_order + 1):
        lo, hi = -0.6, 0.7
        increment = numerics.legendre_integral(lambda t: bump(t, n), lo, hi, 64)
        exact = bump(hi, n - 1) - bump(lo, n - 1)
        worst = max(worst, abs(increment - exact) / max(1.0, abs(exact)))
    return worst, {}


def _support_no_leakage():
    worst = 0.0
    for f in _builtin_functions() + [funcspace.make_exp_bump(1.5)]:
        outside = np.concatenate([np.linspace(1.0001, 2.0, 40), -np.linspace(1.0001, 2.0, 40)]) * f.support_radius
        for n in range(f.max_derivative_order + 1):
            worst = max(worst, float(np.max(np.abs(f(outside, n)))))
    return worst, {}


def _norm_symmetry():
    worst = 0.0
    for f in _builtin_functions():
        for alpha in (0.0, 0.5, 1.3):
            worst = max(worst, abs(funcspace.weighted_l1_norm(f, alpha) - funcspace.weighted_l1_norm(funcspace.reflect(f), alpha)))
    return worst, {}


def _norm_examples():
    f = funcspace.make_poly_bump(1.0, 2)
    half = funcspace.weighted_l1_norm(f, 0.5)
    zero = funcspace.weighted_l1_norm(f, 0.0)
    return max(abs(half - 16.0 / 105.0), abs(zero - 1.0 / 3.0)), {"alpha_half": half, "alpha_zero": zero}


# ---------------------------------------------------------------------------
# intertwine
# ---------------------------------------------------------------------------

def _dx2_expansion():
    worst = 0.0
    exp_jet = lambda x, n: np.exp(x)
    second = lambda x: math.exp(x) * (x - 1.0) / (4.0 * x ** 3)
    for x in (0.5, 1.0, 2.0):
        p1 = float(intertwine.dx2_apply(exp_jet, x, 1))
        p2 = float(intertwine.dx2_apply(exp_jet, x, 2))
        p3 = float(intertwine.dx2_apply(exp_jet, x, 3))
        nested, _ = numerics.richardson_derivative(second, x, 1, 0.01 * x)
        worst = max(worst, abs(p1 - math.exp(x) / (2.0 * x)), abs(p2 - second(x)), abs(p3 - nested / (2.0 * x)))
    return worst, {}


def _chi_inverse_round_trip():
    f = funcspace.make_poly_bump(2.0, 4)
    worst = 0.0
    for alpha in (0.5, 1.5, 0.3, 1.2):
        image = lambda x, n, alpha=alpha: intertwine.chi_derivative(f, alpha, x, n)
        for x in (0.3, 0.9, 1.5):
            worst = max(worst, abs(intertwine.chi_inverse(image, alpha, x) - f(x)))
    return worst, {}


def _weyl_closed_form():
    f = funcspace.make_poly_bump(1.0, 2)
    ys = np.concatenate([np.linspace(0.025, 0.975, 20), -np.linspace(0.025, 0.975, 20)])
    values = intertwine.weyl(f, 0.5, ys)
    expected = (1.0 - ys ** 2) ** 3 / 6.0
    return float(np.max(np.abs(values - expected))), {"points": int(ys.size)}


def _weyl_support():
    worst = 0.0
    for f in _standard_bumps():
        a = f.support_radius
        ys = np.concatenate([np.linspace(a, 2 * a, 6), -np.linspace(a, 2 * a, 6)])
        for alpha in (0.3, 1.5):
            worst = max(worst, float(np.max(np.abs(intertwine.weyl(f, alpha, ys)))))
    return worst, {}


def _round_trip_v_of_w():
    worst = 0.0
    for f in _standard_bumps():
        a = f.support_radius
        xs = np.array([0.2, 0.5, 0.8, -0.2, -0.5, -0.8]) * a
        for alpha in (0.5, 1.5, 2.5, 0.3, 1.2):
            g = intertwine.weyl_image(f, alpha)
            recovered = intertwine.v_alpha(g, alpha, xs)
            worst = max(worst, float(np.max(np.abs(recovered - f(xs)))))
    return worst, {"evaluations": 60}


def _inverse_cases():
    poly, odd = funcspace.make_poly_bump(1.0, 4), funcspace.make_odd_bump(1.0, 4)
    # one order per branch: half-integer k = 0, 1 and general k = 0, 1
    return [(poly, 0.5), (odd, 1.5), (odd, 0.3), (poly, 1.2), (poly, 0.3), (odd, 1.2)]


def _round_trip_w_of_v():
    xs = np.array([0.2, -0.35, 0.5, -0.65, 0.8, -0.9])
    worst = 0.0
    for f, alpha in _inverse_cases():
        g = intertwine.weyl_image(f, alpha, nodes=24)
        inverse = funcspace.make_custom(
            f.support_radius, lambda x, n, alpha=alpha, g=g: intertwine.v_alpha(g, alpha, x, nodes=24), 0
        )
        recovered = intertwine.weyl(inverse, alpha, xs, nodes=24)
        worst = max(worst, float(np.max(np.abs(recovered - g(xs)))))
    return worst, {"cases": len(_inverse_cases()), "points": int(xs.size)}


def _derivative_recurrence():
    f = funcspace.make_poly_bump(1.0, 2)
    ys = np.concatenate([np.linspace(0.05, 0.95, 10), -np.linspace(0.05, 0.95, 10)])
    worst = 0.0
    for alpha in (1.5, 2.5):
        derivative = intertwine.weyl_derivative(f, alpha, ys, 1)
        lowered = intertwine.weyl(f, alpha - 1.0, ys)
        worst = max(worst, float(np.max(np.abs(derivative + 2.0 * alpha * ys * lowered))))
    return worst, {"points": int(ys.size)}


def _weyl_origin_limits():
    f = funcspace.make_poly_bump(1.0, 4)
    worst = 0.0
    for alpha in (0.3, 0.5, 1.5):
        records = funcspace.check_k0_limits(intertwine.weyl_image(f, alpha), n_max=3, tol=1e-5)
        worst = max(worst, max(r.spread / max(1.0, abs(r.value)) for r in records))
    return worst, {}


def _v_w_duality():
    g = funcspace.make_poly_bump(1.0, 3)
    worst = 0.0
    for f, alpha in _inverse_cases():
        image = intertwine.weyl_image(f, alpha, nodes=24)
        lhs, rhs = intertwine.v_w_duality(image, g, alpha, nodes=24)
        worst = max(worst, abs(lhs - rhs))
    return worst, {"cases": len(_inverse_cases())}


def _chi_star_pairing():
    constant = lambda x, n: np.ones_like(x) if n == 0 else np.zeros_like(x)
    lhs1, rhs1 = intertwine.chi_star_pairing(constant, funcspace.make_poly_bump(1.0, 2), 0.5)
    lhs2, rhs2 = intertwine.chi_star_pairing(lambda x, n: np.exp(x), funcspace.make_poly_bump(1.0, 3), 1.5)
    residual = max(abs(lhs1 - 16.0 / 105.0), abs(rhs1 - 16.0 / 105.0), abs(lhs2 - rhs2))
    return residual, {"exp_pair": [lhs2.real, rhs2.real]}


def _weyl_l1_boundedness():
    rng = np.random.default_rng(11)
    worst = -math.inf
    for _ in range(5):
        f = funcspace.make_poly_bump(float(rng.uniform(0.5, 2.0)), int(rng.integers(2, 6)))
        alpha = float(rng.choice([0.3, 0.5, 1.5]))
        bound = intertwine.weyl_l1_bound_constant(alpha) * funcspace.weighted_l1_norm(f, alpha)
        worst = max(worst, intertwine.weyl_l1_norm(f, alpha) - bound)
    return max(worst, 0.0), {"bumps": 5}


def _weyl_l1_constant():
    return max(abs(intertwine.weyl_l1_bound_constant(alpha) - 1.0) for alpha in (-0.3, 0.3, 0.5, 1.2, 2.5)), {}


def _seminorm_rho():
    f = funcspace.make_poly_bump(1.0, 4)
    points = funcspace.symmetric_grid(1.0, 40, fraction=1.0)
    worst = 0.0
    for alpha, n in ((0.5, 2), (1.5, 1)):
        order = as_order(alpha)
        g = intertwine.weyl_image(f, order)
        rho = intertwine.seminorm_rho(g, order, n, points=points)
        factor = 1.0 / intertwine.half_integer_constant(order)
        expected = factor * max(float(np.max(np.abs(f(points, p)))) for p in range(n + 1))
        worst = max(worst, abs(rho - expected) / expected)
    return worst, {}


def _seminorm_q():
    f = funcspace.make_poly_bump(1.0, 4)
    points = funcspace.symmetric_grid(1.0, 10)
    worst = 0.0
    for alpha in (0.3, 1.2):
        order = as_order(alpha)
        g = intertwine.weyl_image(f, order)
        q = intertwine.seminorm_q(g, order, 1, points=points)
        expected = max(float(np.max(np.abs(f(points, p)))) for p in range(2)) / intertwine.inverse_constant(order)
        worst = max(worst, abs(q - expected) / abs(expected))
    return worst, {}


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def _factorization():
    lams = np.array([0.5, 1.0, 2.0, 5.0])
    worst = 0.0
    for f in (funcspace.make_poly_bump(1.0, 3), funcspace.make_odd_bump(1.0, 3)):
        for alpha in (0.3, 0.5, 1.5):
            direct = transforms.bs_transform_many(f, alpha, lams.astype(complex))
            factored = transforms.bs_transform_factored(f, alpha, lams)
            worst = max(worst, float(np.max(np.abs(direct - factored))))
    return worst, {}


def _transform_examples():
    f = funcspace.make_poly_bump(1.0, 2)
    residual = abs(transforms.bs_transform(f, 0.5, 0.0) - 16.0 / 105.0)
    rule = numerics.gauss_legendre(64)
    x = rule.nodes
    for lam in (0.5, 2.0, 5.0):
        closed = np.sin(lam * x) / (lam * x) - 1j * (1.0 - np.cos(lam * x)) / (lam * x)
        expected = rule.integrate(f(x) * closed * x ** 2)
        residual = max(residual, abs(transforms.bs_transform(f, 0.5, lam) - expected))
    return residual, {}


def _sup_norm_bound():
    lams = np.linspace(-50.0, 50.0, 200)
    worst = -math.inf
    for f in (funcspace.make_poly_bump(1.0, 2), funcspace.make_poly_bump(2.0, 3), funcspace.make_odd_bump(1.0, 3)):
        for alpha in (0.3, 1.5):
            peak = float(np.max(transforms.decay_profile(f, alpha, lams)))
            worst = max(worst, peak - funcspace.weighted_l1_norm(f, alpha))
    return max(worst, 0.0), {"lambdas": int(lams.size)}


def _transform_decay():
    f = funcspace.make_poly_bump(1.0, 4)
    norm = funcspace.weighted_l1_norm(f, 0.5)
    values = transforms.decay_profile(f, 0.5, [50.0, 100.0, 200.0])
    residual = max(0.0, values[0] - 0.1 * norm, values[1] - values[0], values[2] - values[1])
    return residual, {"abs_values": values.tolist()}


def _derivative_transforms():
    f = funcspace.make_poly_bump(1.0, 3)
    worst = 0.0
    for alpha in (0.5, 1.5):
        for lam in (0.7, 2.1):
            for n in (1, 2):
                analytic = transforms.bs_transform_derivative(f, alpha, lam, n)
                numeric, _ = numerics.richardson_derivative(lambda l: transforms.bs_transform(f, alpha, l), lam, n)
                worst = max(worst, abs(analytic - numeric))
    return worst, {}


def _dirac_linearity():
    first = DiracCombination.from_triples([[1.0, 0.3, 0]], 1.0)
    second = DiracCombination.from_triples([[2.0, -0.5, 1]], 1.0)
    zs = np.array([0.5, 2.0, 1.0 + 1.0j, -3.0j])
    combined = transforms.bs_transform_dirac(first + second.scaled(3.0), 0.7, zs)
    separate = transforms.bs_transform_dirac(first, 0.7, zs) + 3.0 * transforms.bs_transform_dirac(second, 0.7, zs)
    return float(np.max(np.abs(combined - separate) / (1.0 + np.abs(separate)))), {}


def _dirac_examples():
    zs = np.array([0.5, 2.0, 1.0 + 1.0j])
    delta = DiracCombination.from_triples([[1.0, 0.0, 0]])
    prime = DiracCombination.from_triples([[1.0, 0.0, 1]])
    alpha = 1.3
    slope = math.gamma(alpha + 1.0) / (math.sqrt(math.pi) * math.gamma(alpha + 1.5))
    residual = float(np.max(np.abs(transforms.bs_transform_dirac(delta, alpha, zs) - 1.0)))
    residual = max(residual, float(np.max(np.abs(transforms.bs_transform_dirac(prime, alpha, zs) - 1j * zs * slope))))
    shifted = DiracCombination.from_triples([[1.0, 0.5, 0]])
    expected = math.sin(1.0) - 1j * (1.0 - math.cos(1.0))
    residual = max(residual, abs(transforms.bs_transform_dirac(shifted, 0.5, 2.0) - expected))
    return residual, {}


def _duality():
    pairs = [
        (funcspace.make_poly_bump(1.0, 2), funcspace.make_poly_bump(2.0, 3)),
        (funcspace.make_odd_bump(1.0, 3), funcspace.make_poly_bump(1.5, 2)),
        (funcspace.make_poly_bump(0.5, 3), funcspace.make_odd_bump(1.0, 2)),
    ]
    worst = 0.0
    for f, g in pairs:
        for alpha in (0.3, 0.5, 1.5):
            lhs, rhs = transforms.duality_check(f, g, alpha)
            worst = max(worst, abs(lhs - rhs))
    return worst, {"pairs": 9}


def _hankel_coincidence():
    lams = np.linspace(0.25, 5.0, 20)
    worst = 0.0
    for f in (funcspace.make_poly_bump(1.0, 2), funcspace.make_poly_bump(2.0, 3), funcspace.make_poly_bump(1.5, 4)):
        for alpha in (0.5, 1.3):
            direct = transforms.bs_transform_many(f, alpha, lams.astype(complex))
            hankel = np.array([transforms.hankel(f, alpha, lam) for lam in lams])
            worst = max(worst, float(np.max(np.abs(direct - 2.0 * hankel))))
    return worst, {"lambdas": int(lams.size)}


def _fourier_examples():
    f = funcspace.make_poly_bump(1.0, 2)
    residual = abs(transforms.fourier(f, 0.0) - 16.0 / 15.0)
    image = intertwine.weyl_image(f, 0.5)
    residual = max(residual, abs(transforms.fourier(image, 0.0) - 16.0 / 105.0))
    values = transforms.fourier(f, np.array([0.3, 1.7, 4.0]))
    residual = max(residual, float(np.max(np.abs(values.imag))))
    return residual, {}


def _chi_star_dirac():
    worst = 0.0
    zs = np.array([0.0, 0.5, 2.0, 1.0 + 1.0j])
    for x0 in (0.7, -0.4):
        density = transforms.chi_star_dirac_density(x0, 1.5)
        expected = transforms.bs_transform_dirac(DiracCombination.from_triples([[1.0, x0, 0]]), 1.5, zs)
        worst = max(worst, float(np.max(np.abs(transforms.fourier(density, zs) - expected))))
    return worst, {}


def _spectrum_evenness():
    f = funcspace.make_poly_bump(1.0, 3)
    sample = transforms.spectrum_line(f, 1.2, np.linspace(-10.0, 10.0, 41))
    return float(np.max(np.abs(sample.values.imag))), {}


# ---------------------------------------------------------------------------
# paley-wiener
# ---------------------------------------------------------------------------

def _exponential_type():
    fitted = []
    residual = 0.0
    for a in (0.5, 1.0, 2.0):
        f = funcspace.make_poly_bump(a, 3)
        sample = paley_wiener.complex_scan(f, 0.5, ComplexGrid.square(20.0 / a, 41))
        fit = paley_wiener.fit_exponential_type(sample)
        fitted.append(fit.a)
        residual = max(residual, _outside(fit.a, 0.85 * a, 1.10 * a), fit.residual)
    residual = max(residual, fitted[0] - fitted[1], fitted[1] - fitted[2])
    return residual, {"fitted": fitted}


def _schwartz_envelope():
    grid = ComplexGrid.square(20.0, 41)
    delta = paley_wiener.schwartz_envelope_check(DiracCombination.from_triples([[1.0, 0.0, 0]]), 0.5, grid)
    prime = paley_wiener.schwartz_envelope_check(DiracCombination.from_triples([[1.0, 0.0, 1]]), 0.5, grid)
    shifted = paley_wiener.schwartz_envelope_check(DiracCombination.from_triples([[1.0, 0.9, 0]]), 0.5, grid)
    residual = max(
        abs(delta.m) + delta.b,
        abs(prime.m - 1) + prime.b,
        _outside(shifted.b, 0.8, 1.0) + max(0, shifted.m - 1),
    )
    fits = {"delta": [delta.m, delta.b], "delta_prime": [prime.m, prime.b], "delta_0.9": [shifted.m, shifted.b]}
    return residual, fits


def _finite_part():
    worst = 0.0
    points = (0.5, 2.0, 1.0 + 1.0j, -1.5 + 0.5j, 3.0j)
    for k, alpha in ((1, 0.5), (2, 1.5)):
        f = funcspace.make_poly_bump(1.0, 4)
        for z in points:
            worst = max(worst, _pair(*paley_wiener.finite_part_identity(f, alpha, k, z)))
    return worst, {"evaluations": 10}


def _lambda_half():
    axis = np.linspace(-3.0, 3.0, 5)
    zs = [complex(re, im) for re in axis for im in (-1.5, 2.5, 4.0, 0.5) if complex(re, im) != 0][:20]
    worst = 0.0
    for f in (funcspace.make_poly_bump(1.0, 2), funcspace.make_odd_bump(1.0, 3)):
        for z in zs:
            worst = max(worst, _pair(*paley_wiener.lambda_half_check(f, z)))
    return worst, {"points": len(zs)}


def _order_recurrence():
    f = funcspace.make_poly_bump(1.0, 4)
    zs = [1.3, 0.5j, 2.0 + 1.0j, -1.0 + 0.5j, 3.0, -2.5j, 0.7 - 0.7j, 4.0 + 2.0j, -3.0 - 1.0j, 0.2]
    worst = max(_pair(*paley_wiener.order_recurrence_check(f, 1.5, z)) for z in zs)
    return worst, {"points": len(zs)}


def _cauchy_riemann():
    points = [complex(re, im) for re in (-3.5, -1.5, 0.5, 2.5) for im in (-2.5, -0.5, 1.5, 3.5)]
    worst = 0.0
    for f in (funcspace.make_poly_bump(1.0, 2), funcspace.make_odd_bump(1.0, 3)):
        worst = max(worst, paley_wiener.cauchy_riemann_residual(f, 0.7, points))
    return worst, {"points": len(points)}


def _conjugate_symmetry():
    zs = np.array([0.5 + 0.5j, -2.0 + 1.0j, 3.0 - 2.0j, 1.5j])
    worst = 0.0
    for f in (funcspace.make_poly_bump(1.0, 3), funcspace.make_odd_bump(1.0, 3)):
        worst = max(worst, paley_wiener.conjugate_symmetry_residual(f, 0.8, zs))
    return worst, {}


def _paley_wiener_constant():
    f = funcspace.make_poly_bump(1.0, 3)
    grid = ComplexGrid.square(8.0, 11)
    worst = -math.inf
    for alpha in (0.5, 1.5):
        sample = paley_wiener.complex_scan(f, alpha, grid)
        keep = sample.points != 0
        ratio = float(np.max(np.abs(sample.values[keep]) * np.exp(-np.abs(sample.points[keep]))))
        for k in (0, 1, 2):
            worst = max(worst, ratio - paley_wiener.paley_wiener_constant(f, alpha, k))
    return max(worst, 0.0), {}


def _imaginary_axis_growth():
    f = funcspace.make_poly_bump(1.0, 2)
    growth = paley_wiener.imaginary_axis_growth(f, 0.5, [20.0, 30.0, 40.0])
    residual = max(0.0, growth[0] - growth[1], growth[1] - growth[2], growth[2] - 1.0)
    return residual, {"growth": growth.tolist()}


def register_builtin_properties() -> None:
    """Fill the registry with every built-in property."""
    entries = [
        ("quadrature_moments", "numerics", "Jacobi rules reproduce 2n Beta-function moments", 1e-11, _quadrature_moments),
        ("gamma_recurrence", "numerics", "Gamma(x+1) = x Gamma(x) on 0.1..10", 1e-12, _gamma_recurrence),
        ("gamma_accuracy", "numerics", "Lanczos gamma against scipy on [0.1, 50]", 1e-13, _gamma_accuracy),
        ("jacobi_doubling", "numerics", "doubling n from 16 leaves int (1-t)^b e^t unchanged", 1e-12, _jacobi_doubling),
        ("richardson_examples", "numerics", "Richardson derivatives of t^3 and exp", 1e-7, _richardson_examples),
        ("route_consistency", "kernel", "series and integral routes agree on 750 points", 1e-10, _route_consistency),
        ("kernel_symmetry", "kernel", "S_{-i lambda}(z) = S_{-iz}(lambda)", 1e-10, _kernel_symmetry),
        ("kernel_reflection", "kernel", "S_{-lambda}(z) = S_lambda(-z)", 1e-12, _kernel_reflection),
        ("kernel_boundedness", "kernel", "|S_{i lambda}(x)| <= 1 for real lambda, x", 1e-12, _kernel_boundedness),
        ("kernel_decay", "kernel", "|S_{-100i}^{1/2}(1)| <= 0.02", 1e-12, _kernel_decay),
        ("eigenfunction_residual", "kernel", "l_alpha S = lambda^2 S on 60 triples", 1e-7, _eigenfunction_residual),
        ("closed_form_half", "kernel", "S^{1/2}_lambda(x) = (e^{lambda x} - 1)/(lambda x)", 1e-12, _closed_form_half),
        ("initial_slope", "kernel", "S'(0) = lambda Gamma(a+1)/(sqrt(pi) Gamma(a+3/2))", 1e-12, _initial_slope),
        ("derivative_consistency", "funcspace", "built-in derivatives match numerical ones", 1e-7, _derivative_consistency),
        ("support_no_leakage", "funcspace", "built-ins vanish outside their support", 0.0, _support_no_leakage),
        ("norm_symmetry", "funcspace", "weighted L1 norm is reflection invariant", 1e-12, _norm_symmetry),
        ("norm_examples", "funcspace", "closed-form weighted L1 norms", 1e-12, _norm_examples),
        ("dx2_expansion", "intertwine", "(d/dx^2)^p expansion on exp", 1e-6, _dx2_expansion),
        ("chi_inverse_round_trip", "intertwine", "chi^-1 chi f = f on both branches", 1e-7, _chi_inverse_round_trip),
        ("weyl_closed_form", "intertwine", "W_{1/2} of (1-x^2)^2 is (1-y^2)^3/6", 1e-11, _weyl_closed_form),
        ("weyl_support", "intertwine", "W f vanishes for |y| >= a", 0.0, _weyl_support),
        ("round_trip_v_of_w", "intertwine", "V W f = f on both branches", 1e-6, _round_trip_v_of_w),
        ("round_trip_w_of_v", "intertwine", "W V g = g on the W-image", 1e-6, _round_trip_w_of_v),
        ("derivative_recurrence", "intertwine", "(W_a f)' = -2a y W_{a-1} f", 1e-7, _derivative_recurrence),
        ("weyl_origin_limits", "intertwine", "y^n (W f)^(n) has one-sided limits at 0", 1e-5, _weyl_origin_limits),
        ("v_w_duality", "intertwine", "int V f g A = int f chi^-1 g", 1e-6, _v_w_duality),
        ("chi_star_pairing", "intertwine", "int chi f g A = int f W g", 1e-9, _chi_star_pairing),
        ("weyl_l1_boundedness", "intertwine", "int |W f| <= C ||f||_{1,alpha}", 1e-10, _weyl_l1_boundedness),
        ("weyl_l1_constant", "intertwine", "the L1 bound constant equals 1", 1e-12, _weyl_l1_constant),
        ("seminorm_rho", "intertwine", "rho_n(W f) = p_n(f) (2k+1)!/(2^(2k+1) k!)", 1e-6, _seminorm_rho),
        ("seminorm_q", "intertwine", "q_n(W f) = p_n(f) / c_1 off the half-integer branch", 1e-4, _seminorm_q),
        ("factorization", "transforms", "F_BS = F o W_alpha", 1e-8, _factorization),
        ("transform_examples", "transforms", "closed-form transforms at alpha = 1/2", 1e-11, _transform_examples),
        ("sup_norm_bound", "transforms", "|F_BS f| <= ||f||_{1,alpha}", 1e-10, _sup_norm_bound),
        ("transform_decay", "transforms", "|F_BS f(lambda)| decreases on 50, 100, 200", 0.0, _transform_decay),
        ("derivative_transforms", "transforms", "[F_BS f]^(n) = F((-it)^n W f)", 1e-6, _derivative_transforms),
        ("dirac_linearity", "transforms", "Dirac transforms are linear", 1e-13, _dirac_linearity),
        ("dirac_examples", "transforms", "delta_0, delta'_0 and delta_0.5 transforms", 1e-12, _dirac_examples),
        ("duality", "transforms", "int F(f) g dmu = int F(g) f dmu", 1e-8, _duality),
        ("hankel_coincidence", "transforms", "F_BS f = 2 H_alpha f for even f", 1e-9, _hankel_coincidence),
        ("fourier_examples", "transforms", "closed-form Fourier values", 1e-12, _fourier_examples),
        ("chi_star_dirac", "transforms", "F chi*(delta_x0) = F_BS delta_x0", 1e-10, _chi_star_dirac),
        ("spectrum_evenness", "transforms", "even input has a real spectrum", 1e-10, _spectrum_evenness),
        ("exponential_type", "paley-wiener", "fitted type within [0.85a, 1.10a], monotone in a", 0.0, _exponential_type),
        ("schwartz_envelope", "paley-wiener", "Dirac envelopes (m, b)", 0.0, _schwartz_envelope),
        ("finite_part_identity", "paley-wiener", "(iz)^k F_BS f = finite-part integral", 1e-6, _finite_part),
        ("lambda_half", "paley-wiener", "F^{1/2} f = (h'(z) - h'(0))/z", 1e-9, _lambda_half),
        ("order_recurrence", "paley-wiener", "F^a f = a (h'(z) - h'(0))/z", 1e-6, _order_recurrence),
        ("cauchy_riemann", "paley-wiener", "discrete Cauchy-Riemann residual", 1e-5, _cauchy_riemann),
        ("conjugate_symmetry", "paley-wiener", "conj F(z) = F(-conj z) for real f", 1e-12, _conjugate_symmetry),
        ("paley_wiener_constant", "paley-wiener", "|F(z)| <= C_k e^{a|z|}", 1e-12, _paley_wiener_constant),
        ("imaginary_axis_growth", "paley-wiener", "log|F(iy)|/y increases towards the type", 0.0, _imaginary_axis_growth),
    ]
    for name, suite, description, tolerance, runner in entries:
        property_registry.register(PropertySpec(name, suite, description, tolerance, runner))


register_builtin_properties()


__all__ = [
    "SUITES",
    "PropertyResult",
    "PropertySpec",
    "PropertyRegistry",
    "property_registry",
    "register_builtin_properties",
]
