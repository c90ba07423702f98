"""Tests for chi_alpha, its inverse, the Weyl integral and V_alpha."""

from fractions import Fraction

import numpy as np
import pytest

from app.errors import DomainError, OrderError, SmoothnessError
from app.models.order import Order
from app.services import funcspace, intertwine


def constant_one(x, n):
    x = np.asarray(x, dtype=float)
    return np.ones_like(x) if n == 0 else np.zeros_like(x)


def quartic(y, n):
    y = np.asarray(y, dtype=float)
    return (y ** 4, 4.0 * y ** 3, 12.0 * y ** 2)[n]


class TestDx2:

    def test_exact_coefficients(self):
        assert intertwine.exact_beta(1, 0) == (Fraction(0), Fraction(1, 2))
        assert intertwine.exact_beta(2, 0) == (Fraction(0), Fraction(-1, 4), Fraction(1, 4))
        assert intertwine.dx2_coefficients(1).coefficients == (0.0, 0.5)

    def test_power_range(self):
        with pytest.raises(OrderError):
            intertwine.coefficients_beta(13, 0)

    def test_apply_to_monomial(self):
        assert intertwine.dx2_apply(quartic, 0.7, 1) == pytest.approx(2.0 * 0.49, rel=1e-14)
        assert intertwine.dx2_apply(quartic, -1.3, 2) == pytest.approx(2.0, rel=1e-13)


class TestChi:

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 1.2, 2.5])
    def test_constant_is_fixed(self, alpha):
        assert intertwine.chi(constant_one, alpha, 0.7) == pytest.approx(1.0, rel=1e-12)

    def test_inverse_round_trip_half_integer(self, bump):
        image = lambda x, n: intertwine.chi_derivative(bump, 0.5, x, n)
        xs = np.array([-0.6, 0.25, 0.8])
        np.testing.assert_allclose(intertwine.chi_inverse(image, 0.5, xs), bump(xs), atol=1e-10)

    def test_inverse_round_trip_general(self, bump):
        image = lambda x, n: intertwine.chi_derivative(bump, 0.3, x, n)
        assert intertwine.chi_inverse(image, 0.3, 0.45) == pytest.approx(bump(0.45), abs=1e-6)

    def test_inverse_undefined_at_origin(self, bump):
        with pytest.raises(DomainError):
            intertwine.chi_inverse(bump, 0.5, 0.0)

    def test_inverse_needs_derivatives(self, small_bump):
        with pytest.raises(SmoothnessError):
            intertwine.chi_inverse(small_bump, 1.5, 0.3)


class TestWeyl:

    @pytest.mark.parametrize("y", [0.1, -0.35, 0.9])
    def test_closed_form(self, small_bump, y):
        assert intertwine.weyl(small_bump, 0.5, y) == pytest.approx((1.0 - y * y) ** 3 / 6.0, rel=1e-11)

    def test_vanishes_outside_support(self, bump, alpha):
        np.testing.assert_array_equal(intertwine.weyl(bump, alpha, np.array([1.0, -1.5, 3.0])), 0.0)

    def test_undefined_at_origin(self, bump):
        with pytest.raises(DomainError):
            intertwine.weyl(bump, 0.5, 0.0)

    def test_derivative_beyond_budget(self, small_bump):
        with pytest.raises(OrderError):
            intertwine.weyl_derivative(small_bump, 0.5, 0.4, 2)

    def test_first_derivative_closed_form(self, small_bump):
        y = 0.4
        expected = -y * (1.0 - y * y) ** 2
        assert intertwine.weyl_derivative(small_bump, 0.5, y, 1) == pytest.approx(expected, rel=1e-10)

    def test_origin_jump_even(self, bump, alpha):
        assert intertwine.weyl_origin_jump(bump, alpha) == pytest.approx(0.0, abs=1e-14)

    def test_origin_jump_odd(self, odd_bump):
        jump = intertwine.weyl_origin_jump(odd_bump, 0.5)
        limit = intertwine.weyl(odd_bump, 0.5, 1e-6) - intertwine.weyl(odd_bump, 0.5, -1e-6)
        assert jump == pytest.approx(limit, abs=1e-6)
        assert jump > 0.0

    def test_l1_constant(self, alpha):
        assert intertwine.weyl_l1_bound_constant(alpha) == pytest.approx(1.0, rel=1e-12)

    def test_l1_norm_nonnegative_input(self, small_bump):
        assert intertwine.weyl_l1_norm(small_bump, 0.5) == pytest.approx(16.0 / 105.0, rel=1e-9)

    def test_l1_norm_uses_requested_nodes(self, small_bump, monkeypatch):
        seen = []
        real = intertwine.dyadic_integral

        def recording(h, a, nodes=16, *args, **kwargs):
            seen.append(nodes)
            return real(h, a, nodes, *args, **kwargs)

        monkeypatch.setattr(intertwine, 'dyadic_integral', recording)
        assert intertwine.weyl_l1_norm(small_bump, 0.5, nodes=24) == pytest.approx(16.0 / 105.0, rel=1e-9)
        assert seen == [24, 24]


class TestInverseWeyl:

    @pytest.mark.parametrize("alpha", [0.5, 1.5])
    def test_round_trip_half_integer(self, bump, alpha):
        image = intertwine.weyl_image(bump, alpha)
        xs = np.array([-0.7, -0.2, 0.3, 0.85])
        np.testing.assert_allclose(intertwine.v_alpha(image, alpha, xs), bump(xs), atol=1e-8)

    def test_round_trip_general(self, bump):
        image = intertwine.weyl_image(bump, 0.3, nodes=32)
        assert intertwine.v_alpha(image, 0.3, 0.4, nodes=32) == pytest.approx(bump(0.4), abs=1e-5)

    def test_outside_support_is_zero(self, bump):
        image = intertwine.weyl_image(bump, 0.5)
        assert intertwine.v_alpha(image, 0.5, 1.2) == 0.0

    def test_undefined_at_origin(self, bump):
        with pytest.raises(DomainError):
            intertwine.v_alpha(intertwine.weyl_image(bump, 0.5), 0.5, 0.0)


class TestPairings:

    def test_chi_star_pairing(self, small_bump):
        lhs, rhs = intertwine.chi_star_pairing(constant_one, small_bump, 0.5)
        assert lhs == pytest.approx(16.0 / 105.0, rel=1e-12)
        assert rhs == pytest.approx(16.0 / 105.0, rel=1e-9)

    def test_v_w_duality(self, bump, small_bump):
        lhs, rhs = intertwine.v_w_duality(intertwine.weyl_image(bump, 0.5), small_bump, 0.5)
        assert lhs == pytest.approx(rhs, abs=1e-6)


class TestSeminorm:

    def test_general_branch_rejected(self, bump):
        with pytest.raises(OrderError):
            intertwine.seminorm_rho(intertwine.weyl_image(bump, 0.3), 0.3, 0)

    def test_recovers_source(self, bump):
        image = intertwine.weyl_image(bump, 0.5)
        value = intertwine.seminorm_rho(image, 0.5, 0, points=[0.5])
        assert value == pytest.approx(0.75 ** 4 / 2.0, rel=1e-9)

    def test_budget(self, small_bump):
        with pytest.raises(OrderError):
            intertwine.seminorm_rho(intertwine.weyl_image(small_bump, 0.5), 0.5, 1)


class TestGeneralSeminorm:

    def test_half_integer_rejected(self, bump):
        with pytest.raises(OrderError):
            intertwine.seminorm_q(intertwine.weyl_image(bump, 1.5), 1.5, 0)

    def test_recovers_source(self, bump):
        image = intertwine.weyl_image(bump, 0.3)
        value = intertwine.seminorm_q(image, 0.3, 0, points=[0.5])
        expected = 0.75 ** 4 / intertwine.inverse_constant(Order.from_alpha(0.3))
        assert value == pytest.approx(expected, rel=1e-6)

    def test_first_derivative_matches_source(self, bump):
        order = Order.from_alpha(1.2)
        points = np.array([-0.6, 0.3, 0.7])
        value = intertwine.seminorm_q(intertwine.weyl_image(bump, order), order, 1, points=points)
        expected = max(float(np.max(np.abs(bump(points, p)))) for p in (0, 1))
        assert value == pytest.approx(expected / intertwine.inverse_constant(order), rel=1e-4)
