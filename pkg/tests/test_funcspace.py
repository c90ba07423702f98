"""Tests for test functions, descriptors, weighted norms and the K0 limit check."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.errors import DescriptorError, DomainError, SmoothnessError, UsageError
from app.services import funcspace
from app.services.numerics import richardson_derivative


class TestBumps:

    def test_poly_bump_values(self, small_bump):
        assert small_bump(0.0) == 1.0
        assert small_bump(0.5) == pytest.approx(0.5625)
        assert small_bump(1.0) == 0.0
        assert small_bump(1.5) == 0.0
        np.testing.assert_array_equal(small_bump(np.array([-3.0, 3.0])), [0.0, 0.0])

    def test_derivative_budget(self, small_bump, bump):
        assert small_bump.max_derivative_order == 1
        assert bump.max_derivative_order == 3
        assert funcspace.make_exp_bump(1.0).max_derivative_order == 8
        with pytest.raises(SmoothnessError):
            small_bump(0.3, 2)

    @pytest.mark.parametrize("a, m", [(0.0, 2), (-1.0, 3), (1.0, 1), (1.0, 2.5)])
    def test_invalid_parameters(self, a, m):
        with pytest.raises(UsageError):
            funcspace.make_poly_bump(a, m)

    def test_odd_bump_is_odd(self, odd_bump):
        xs = np.linspace(0.0, 0.9, 7)
        np.testing.assert_allclose(odd_bump(-xs), -odd_bump(xs), atol=1e-15)
        assert not funcspace.is_even(odd_bump)

    def test_poly_bump_is_even(self, bump):
        assert funcspace.is_even(bump)

    @settings(max_examples=30)
    @given(st.floats(min_value=-0.9, max_value=0.9))
    def test_derivatives_match_differences(self, x):
        f = funcspace.make_poly_bump(1.0, 4)
        for n in (1, 2):
            estimate, _ = richardson_derivative(lambda t: f(t), x, n, h0=0.02)
            assert f(x, n) == pytest.approx(estimate, abs=1e-6)

    def test_exp_bump_first_derivative(self):
        f = funcspace.make_exp_bump(1.0)
        x = np.array([-0.6, -0.1, 0.3, 0.8])
        expected = -2.0 * x / (1.0 - x * x) ** 2 * f(x)
        np.testing.assert_allclose(f(x, 1), expected, rtol=1e-12)
        assert f(0.0) == pytest.approx(np.exp(-1.0))
        assert f(1.0) == 0.0

    def test_exp_bump_second_derivative(self):
        f = funcspace.make_exp_bump(2.0)
        estimate, _ = richardson_derivative(lambda t: f(t, 1), 0.7, 1, h0=0.01)
        assert f(0.7, 2) == pytest.approx(estimate, abs=1e-8)

    def test_reflect_and_scale(self, odd_bump):
        reflected = funcspace.reflect(odd_bump)
        assert reflected(0.4) == pytest.approx(-odd_bump(0.4))
        assert reflected(0.4, 1) == pytest.approx(-odd_bump(-0.4, 1))
        assert funcspace.scale(odd_bump, 3.0)(0.4) == pytest.approx(3.0 * odd_bump(0.4))

    def test_make_custom_scalar(self):
        f = funcspace.make_custom(1.0, lambda x, n: 2.0 if n == 0 else 0.0, 4, vectorized=False)
        np.testing.assert_array_equal(f(np.array([0.1, 0.5, 2.0])), [2.0, 2.0, 0.0])


class TestDescriptors:

    def test_parse(self):
        f = funcspace.from_descriptor('{"kind": "poly_bump", "a": 2.0, "m": 3}')
        assert f.support_radius == 2.0 and f.max_derivative_order == 2
        assert funcspace.from_descriptor({'kind': 'exp_bump', 'a': 1.5}).smoothness_class == 'exp_bump'
        assert funcspace.from_descriptor({'kind': 'zero'})(0.2) == 0.0

    def test_canonical_form(self, small_bump):
        assert funcspace.to_descriptor(small_bump) == '{"a":1.0,"kind":"poly_bump","m":2}'

    @pytest.mark.parametrize("text", ['not json', '[1, 2]', '{"a": 1}', '{"kind": "gaussian"}',
                                      '{"kind": "poly_bump", "m": "x"}'])
    def test_invalid(self, text):
        with pytest.raises(DescriptorError):
            funcspace.from_descriptor(text)


class TestMeasure:

    @pytest.mark.parametrize("alpha, expected", [(0.5, 16.0 / 105.0), (0.0, 1.0 / 3.0)])
    def test_norm_examples(self, small_bump, alpha, expected):
        assert funcspace.weighted_l1_norm(small_bump, alpha) == pytest.approx(expected, rel=1e-12)

    def test_norm_needs_nodes(self, small_bump):
        with pytest.raises(UsageError):
            funcspace.weighted_l1_norm(small_bump, 0.5, nodes=8)

    def test_norm_symmetric(self, odd_bump, alpha):
        reflected = funcspace.reflect(odd_bump)
        assert funcspace.weighted_l1_norm(reflected, alpha) == pytest.approx(
            funcspace.weighted_l1_norm(odd_bump, alpha), rel=1e-12)

    def test_measure_integral_odd_vanishes(self, odd_bump):
        assert funcspace.measure_integral(odd_bump, 1.2, 1.0) == pytest.approx(0.0, abs=1e-15)

    def test_measure_density(self):
        density = funcspace.measure(0.5).density(np.array([-2.0, 0.0, 3.0]))
        np.testing.assert_allclose(density, [4.0, 0.0, 9.0])

    def test_sup_seminorm(self, small_bump):
        assert funcspace.sup_seminorm(small_bump, 0) == pytest.approx(1.0)
        assert funcspace.sup_seminorm(small_bump, 1) >= 1.0


class TestGridsAndLimits:

    def test_symmetric_grid(self):
        grid = funcspace.symmetric_grid(2.0, 6)
        assert grid.size == 6 and not np.any(grid == 0.0)
        np.testing.assert_allclose(grid, -grid[::-1])
        assert grid.max() == pytest.approx(1.9)

    def test_symmetric_grid_odd_count(self):
        with pytest.raises(DomainError):
            funcspace.symmetric_grid(1.0, 5)

    def test_k0_limits_for_bump(self, bump):
        records = funcspace.check_k0_limits(bump)
        assert len(records) == 2 * (bump.max_derivative_order + 1)
        assert all(r.converged for r in records)
        first = [r for r in records if r.order == 0]
        assert all(r.value == pytest.approx(1.0) for r in first)

    def test_k0_limits_flag_divergence(self):
        g = funcspace.half_line_function(1.0, 1, lambda x, n: np.log(np.abs(x)) if n == 0 else 1.0 / x)
        records = funcspace.check_k0_limits(g)
        assert not next(r for r in records if r.order == 0 and r.side == 1).converged
        assert next(r for r in records if r.order == 1 and r.side == 1).converged

    def test_half_line_undefined_at_origin(self):
        g = funcspace.half_line_function(1.0, 0, lambda x, n: np.sign(x))
        with pytest.raises(DomainError):
            g(0.0)
        assert g(-0.5) == -1.0
