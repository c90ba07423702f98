"""Tests for the Bessel-Struve kernel and its operator."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from app.errors import DomainError, OrderError, PrecisionLossError, SizeError
from app.models.order import Order
from app.models.spectra import KernelRoute
from app.services import kernel


def test_order_split():
    assert Order.from_alpha(0.3).k == 0 and Order.from_alpha(0.3).r == pytest.approx(0.3)
    assert Order.from_alpha(1.2).k == 1 and Order.from_alpha(1.2).r == pytest.approx(0.2)
    assert Order.from_alpha(1.5).half_integer and Order.from_alpha(1.5).r == 0.5
    with pytest.raises(OrderError):
        Order.from_alpha(-0.6)
    with pytest.raises(OrderError):
        Order.from_alpha(0.5).lowered()


def test_order_rejects_inconsistent_split():
    with pytest.raises(OrderError, match='alpha must exceed -1/2'):
        Order(alpha=-0.6, k=0, r=-0.6, half_integer=False)
    with pytest.raises(OrderError):
        Order(alpha=1.2, k=0, r=0.2, half_integer=False)
    with pytest.raises(OrderError):
        Order(alpha=1.5, k=1, r=0.5, half_integer=False)
    assert Order(alpha=1.2, k=1, r=1.2 - 1, half_integer=False) == Order.from_alpha(1.2)


def test_integral_route_node_count():
    with pytest.raises(SizeError):
        kernel.kernel_integral(0.5, 1.0, 1.0, nodes=4)
    assert kernel.kernel_integral(0.5, 0.0, 1.0).nodes == 64
    shortcut = kernel.kernel_integral(1.2, 0.0, 1.0, nodes=48)
    assert shortcut.nodes == kernel.kernel_integral(1.2, 1e-9, 1.0, nodes=48).nodes


def test_normalizing_constant_half():
    assert kernel.normalizing_constant(0.5) == pytest.approx(1.0, rel=1e-14)


def test_value_at_origin(alpha):
    assert kernel.kernel_series(alpha, 2.0 + 1.0j, 0.0).value == 1.0
    assert kernel.kernel_integral(alpha, 3.0, 0.0).value == 1.0


def test_closed_value_half():
    point = kernel.kernel_series(0.5, 1.0, 1.0)
    assert point.value == pytest.approx(math.e - 1.0, rel=1e-13)
    assert point.route is KernelRoute.SERIES


@pytest.mark.parametrize("lam, x", [(1.0, 0.7), (2.5, 1.3), (4.0, -2.0)])
def test_closed_form_half_oscillatory(lam, x):
    u = lam * x
    expected = math.sin(u) / u - 1j * (1.0 - math.cos(u)) / u
    assert kernel.kernel_series(0.5, -1j * lam, x).value == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("lam, x", [(1.0, 0.5), (-2.0, 1.5), (3.0j, 2.0), (1.0 + 2.0j, -1.0)])
def test_routes_agree(alpha, lam, x):
    series = kernel.kernel_series(alpha, lam, x).value
    integral = kernel.kernel_integral(alpha, lam, x).value
    assert abs(series - integral) <= 1e-10 * max(1.0, abs(series))


@settings(max_examples=40)
@given(st.floats(min_value=-20.0, max_value=20.0), st.floats(min_value=-2.0, max_value=2.0))
def test_bounded_on_imaginary_axis(lam, x):
    value = kernel.kernel_integral(1.2, 1j * lam, x).value
    assert abs(value) <= 1.0 + 1e-12


def test_reflection_and_symmetry():
    order = Order.from_alpha(1.2)
    left = kernel.kernel_series(order, 1.5 + 0.5j, -0.8).value
    assert left == pytest.approx(kernel.kernel_series(order, -1.5 - 0.5j, 0.8).value, abs=1e-14)
    assert kernel.kernel_series(order, 0.8, 1.5).value == pytest.approx(
        kernel.kernel_series(order, 1.5, 0.8).value, abs=1e-14)


def test_decay_for_negative_parameter():
    value = kernel.kernel_integral(0.5, -100.0, 1.0).value
    assert value.real == pytest.approx((1.0 - math.exp(-100.0)) / 100.0, rel=1e-10)
    assert 0.0 < value.real < 1.0


def test_series_window():
    with pytest.raises(PrecisionLossError):
        kernel.kernel_series(0.5, 1.0, 61.0)
    point = kernel.evaluate_kernel(0.5, 1.0, 61.0)
    assert point.route is KernelRoute.INTEGRAL
    assert point.value.real == pytest.approx(math.expm1(61.0) / 61.0, rel=1e-10)


def test_auto_prefers_series_when_cancellation_is_small():
    assert kernel.evaluate_kernel(0.3, 2.0, 1.0).route is KernelRoute.SERIES


def test_unknown_route():
    with pytest.raises(DomainError):
        kernel.evaluate_kernel(0.5, 1.0, 1.0, route='bogus')


def test_initial_slope(alpha):
    lam = 2.0 - 0.5j
    slope = kernel.kernel_initial_slope(alpha, lam)
    assert kernel.kernel_derivative(alpha, lam, 0.0, 1) == pytest.approx(slope, rel=1e-10)


def test_initial_slope_matches_differences():
    order = Order.from_alpha(0.3)
    evaluator = kernel.numeric_evaluator(lambda x: kernel.kernel_series(order, 1.5, x).value)
    assert evaluator(0.0, 1) == pytest.approx(kernel.kernel_initial_slope(order, 1.5), abs=1e-8)


def test_derivative_order_range():
    with pytest.raises(OrderError):
        kernel.kernel_derivative(0.5, 1.0, 0.5, 13)


@pytest.mark.parametrize("x", [0.4, -1.1, 2.0])
def test_eigenfunction(alpha, x):
    lam = 1.3 - 0.4j
    evaluator = kernel.kernel_evaluator(alpha, lam)
    lhs = kernel.apply_bessel_struve_op(evaluator, alpha, x)
    rhs = lam ** 2 * kernel.kernel_integral(alpha, lam, x).value
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_operator_undefined_at_origin():
    with pytest.raises(DomainError):
        kernel.apply_bessel_struve_op(kernel.kernel_evaluator(0.5, 1.0), 0.5, 0.0)


def test_kernel_values_matches_pointwise():
    xs = np.array([[0.25, -0.5], [1.0, 1.75]])
    values = kernel.kernel_values(1.2, 2.0j, xs)
    assert values.shape == xs.shape
    for x, value in zip(xs.ravel(), values.ravel()):
        assert value == pytest.approx(kernel.kernel_integral(1.2, 2.0j, x).value, abs=1e-13)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 1.2, 2.5])
@pytest.mark.parametrize("z", [0.7, 3.0, 8.5])
def test_normalized_bessel_and_struve(alpha, z):
    scale = special.gamma(alpha + 1.0) * (z / 2.0) ** -alpha
    assert kernel.bessel_j_norm(alpha, z).real == pytest.approx(scale * special.jv(alpha, z), abs=1e-10)
    assert kernel.struve_h_norm(alpha, z).real == pytest.approx(scale * special.struve(alpha, z), abs=1e-10)


def test_cancellation_loss():
    assert kernel.cancellation_loss(2.0, 3.0) == 0.0
    assert kernel.cancellation_loss(-2.0, 3.0) == pytest.approx(6.0)
