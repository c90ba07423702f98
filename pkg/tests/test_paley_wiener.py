"""Tests for complex scans, growth envelope fits and the image identities."""

import math

import numpy as np
import pytest

from app.errors import DegenerateError, DomainError, OrderError, WindowError
from app.models.order import Order
from app.models.run_config import ComplexGrid, GridSpec
from app.models.spectra import DiracCombination, SpectrumSample
from app.services import funcspace, paley_wiener


def synthetic_sample(values_of, radius: float = 20.0, steps: int = 21) -> SpectrumSample:
    points = ComplexGrid.square(radius, steps).points()
    return SpectrumSample(points, values_of(points), Order.from_alpha(0.5))


def test_truncated_exponential():
    w = np.array([0.5, -0.25j, 3.0])
    expected = np.exp(w) - 1.0 - w
    np.testing.assert_allclose(paley_wiener.truncated_exponential(w, 2), expected, rtol=1e-12)


class TestExponentialTypeFit:

    def test_needs_enough_samples(self):
        sample = synthetic_sample(np.abs, radius=20.0, steps=5)
        with pytest.raises(DomainError):
            paley_wiener.fit_exponential_type(sample, 1.0)

    def test_needs_large_radius(self):
        sample = synthetic_sample(np.abs, radius=5.0, steps=21)
        with pytest.raises(DomainError):
            paley_wiener.fit_exponential_type(sample, 1.0)

    def test_degenerate(self):
        sample = synthetic_sample(lambda z: np.zeros_like(z))
        with pytest.raises(DegenerateError):
            paley_wiener.fit_exponential_type(sample, 1.0)

    def test_synthetic_growth(self):
        sample = synthetic_sample(lambda z: np.exp(0.7 * np.abs(z)))
        fit = paley_wiener.fit_exponential_type(sample, 1.0)
        assert fit.kind == 'exp_type'
        assert fit.a == pytest.approx(0.7)
        assert fit.C == pytest.approx(1.0, rel=1e-9)
        assert fit.residual <= 1e-9

    def test_transform_of_bump(self):
        f = funcspace.make_poly_bump(1.0, 3)
        sample = paley_wiener.complex_scan(f, 0.5, ComplexGrid.square(20.0, 41))
        fit = paley_wiener.fit_exponential_type(sample)
        assert 0.85 <= fit.a <= 1.10
        assert np.all(np.abs(sample.values) <= fit.C * np.exp(fit.a * np.abs(sample.points)) * (1.0 + 1e-9))

    def test_synthetic_type_is_smallest_passing(self):
        sample = synthetic_sample(lambda z: np.exp(0.7 * np.abs(z)))
        fit = paley_wiener.fit_exponential_type(sample, 1.0)
        assert paley_wiener.type_is_stabilized(sample, fit.a)
        assert not paley_wiener.type_is_stabilized(sample, fit.a - 0.05)
        assert paley_wiener.type_growth_rate(sample, 0.6) == pytest.approx(0.1, abs=1e-9)

    def test_polynomial_factor_does_not_raise_type(self):
        sample = synthetic_sample(lambda z: (1.0 + np.abs(z)) ** 4 * np.exp(0.5 * np.abs(z)))
        fit = paley_wiener.fit_exponential_type(sample, 1.0)
        assert fit.a == pytest.approx(0.5)
        assert fit.residual <= 1e-9

    def test_bump_type_is_smallest_passing(self):
        f = funcspace.make_poly_bump(1.0, 3)
        sample = paley_wiener.complex_scan(f, 0.5, ComplexGrid.square(20.0, 41))
        fit = paley_wiener.fit_exponential_type(sample)
        assert fit.extras['stabilized']
        assert paley_wiener.type_is_stabilized(sample, fit.a)
        assert not paley_wiener.type_is_stabilized(sample, round(fit.a - 0.05, 10))


class TestSchwartzEnvelope:

    grid = ComplexGrid.square(20.0, 41)

    def test_point_mass(self):
        fit = paley_wiener.schwartz_envelope_check(DiracCombination.from_triples([[1.0, 0.0, 0]]), 0.5, self.grid)
        assert (fit.m, fit.b) == (0, 0.0)
        assert fit.C == pytest.approx(1.0, rel=1e-12)

    def test_derivative(self):
        fit = paley_wiener.schwartz_envelope_check(DiracCombination.from_triples([[1.0, 0.0, 1]]), 0.5, self.grid)
        assert (fit.m, fit.b) == (1, 0.0)

    def test_precomputed_sample(self):
        delta = DiracCombination.from_triples([[1.0, 0.0, 0]])
        sample = paley_wiener.complex_scan(delta, 0.5, self.grid)
        fit = paley_wiener.schwartz_envelope_check(delta, 0.5, self.grid, sample=sample)
        assert fit.to_serialisable()['kind'] == 'poly_exp'

    def test_degenerate(self):
        empty = DiracCombination.from_triples([[0.0, 0.0, 0]])
        with pytest.raises(DegenerateError):
            paley_wiener.schwartz_envelope_check(empty, 0.5, self.grid)


class TestScan:

    def test_row_major_order(self, bump):
        grid = ComplexGrid(GridSpec(-1.0, 1.0, 2), GridSpec(-1.0, 1.0, 2))
        sample = paley_wiener.complex_scan(bump, 0.5, grid)
        np.testing.assert_array_equal(sample.points, [-1 - 1j, -1 + 1j, 1 - 1j, 1 + 1j])

    def test_window(self, bump):
        with pytest.raises(WindowError):
            paley_wiener.complex_scan(bump, 0.5, ComplexGrid.square(70.0, 3))


class TestIdentities:

    @pytest.mark.parametrize("k, alpha", [(1, 0.5), (2, 1.5)])
    def test_finite_part(self, bump, k, alpha):
        lhs, rhs = paley_wiener.finite_part_identity(bump, alpha, k, 1.0 + 1.0j)
        assert abs(lhs - rhs) <= 1e-6 * (1.0 + abs(lhs))

    def test_finite_part_order_range(self, bump):
        with pytest.raises(OrderError):
            paley_wiener.finite_part_identity(bump, 0.5, 0, 1.0)

    @pytest.mark.parametrize("z", [1.5, -0.7 + 0.4j])
    def test_lambda_half(self, bump, z):
        lhs, rhs = paley_wiener.lambda_half_check(bump, z)
        assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_lambda_half_origin(self, bump):
        with pytest.raises(DomainError):
            paley_wiener.lambda_half_check(bump, 0.0)

    @pytest.mark.parametrize("alpha", [1.5, 1.2])
    def test_order_recurrence(self, bump, alpha):
        lhs, rhs = paley_wiener.order_recurrence_check(bump, alpha, 2.0 - 0.5j)
        assert lhs == pytest.approx(rhs, abs=1e-6)

    def test_order_recurrence_needs_large_order(self, bump):
        with pytest.raises(OrderError):
            paley_wiener.order_recurrence_check(bump, 0.5, 1.0)

    def test_paley_wiener_constant(self, small_bump):
        constant = paley_wiener.paley_wiener_constant(small_bump, 0.5)
        assert constant == pytest.approx(16.0 / 105.0, rel=1e-9)
        for z in (3.0j, -2.0 + 4.0j, 10.0):
            value = paley_wiener.transform_values(small_bump, 0.5, [z])[0]
            assert abs(value) <= constant * math.exp(abs(z)) * (1.0 + 1e-12)

    def test_cauchy_riemann(self, bump):
        assert paley_wiener.cauchy_riemann_residual(bump, 1.2, [1.0 + 1.0j, 2.0 - 0.5j]) <= 1e-5

    def test_conjugate_symmetry(self, bump, alpha):
        assert paley_wiener.conjugate_symmetry_residual(bump, alpha, [0.5 + 2.0j, -3.0 + 0.1j]) <= 1e-12

    def test_imaginary_axis_growth(self, small_bump):
        growth = paley_wiener.imaginary_axis_growth(small_bump, 0.5, [20.0, 30.0, 40.0])
        assert growth[0] < growth[1] < growth[2] < 1.0

    def test_imaginary_axis_positive(self, small_bump):
        with pytest.raises(DomainError):
            paley_wiener.imaginary_axis_growth(small_bump, 0.5, [0.0, 1.0])
