"""Tests for the verification property registry."""

import math

import pytest

from app.errors import DomainError, UsageError
from processing.properties import SUITES, PropertyRegistry, PropertySpec, property_registry


def constant_runner(value):
    return lambda: (value, {"value": value})


def test_catalogue_covers_every_suite():
    names = {spec.suite for spec in property_registry.list()}
    assert names == set(SUITES)
    assert len(property_registry) >= 40


def test_listing_is_sorted():
    specs = property_registry.list()
    keys = [(SUITES.index(spec.suite), spec.name) for spec in specs]
    assert keys == sorted(keys)


def test_unknown_suite():
    with pytest.raises(UsageError):
        property_registry.list("fourier")


def test_get():
    assert property_registry.get("eigenfunction_residual").suite == "kernel"
    with pytest.raises(KeyError):
        property_registry.get("missing")


def test_serialise_fields():
    entry = property_registry.serialise("kernel")[0]
    assert set(entry) == {"name", "suite", "description", "tolerance"}


def test_spec_pass_and_override():
    spec = PropertySpec("p", "numerics", "constant", 1e-6, constant_runner(1e-8))
    assert spec.run().passed
    assert not spec.run(tol=1e-10).passed
    assert spec.run(tol=1e-10).tolerance == 1e-10


def test_raising_runner_fails():
    def runner():
        raise DomainError("outside")

    result = PropertySpec("q", "numerics", "raises", 1.0, runner).run()
    assert not result.passed
    assert math.isinf(result.residual)
    assert "DomainError" in result.detail["error"]
    assert "elapsed" not in result.to_serialisable()


def test_unexpected_exception_fails_without_escaping():
    def runner():
        raise ValueError("singular matrix")

    result = PropertySpec("s", "numerics", "crashes", 1.0, runner).run()
    assert not result.passed
    assert math.isinf(result.residual)
    assert result.detail["error"] == "ValueError: singular matrix"


def test_run_suite_survives_crashing_property():
    registry = PropertyRegistry()
    registry.register(PropertySpec("a", "numerics", "", 1.0, lambda: 1 / 0))
    registry.register(PropertySpec("b", "numerics", "", 1.0, constant_runner(0.0)))
    results = registry.run_suite("numerics")
    assert [r.passed for r in results] == [False, True]
    assert "ZeroDivisionError" in results[0].detail["error"]


def test_non_finite_residual_fails():
    assert not PropertySpec("r", "numerics", "nan", 1.0, constant_runner(float("nan"))).run().passed


def test_local_registry_run_suite():
    registry = PropertyRegistry()
    registry.register(PropertySpec("b", "kernel", "", 1.0, constant_runner(0.5)))
    registry.register(PropertySpec("a", "numerics", "", 1.0, constant_runner(2.0)))
    results = registry.run_suite()
    assert [r.name for r in results] == ["a", "b"]
    assert [r.passed for r in results] == [False, True]


@pytest.mark.parametrize("suite", ["numerics", "funcspace"])
def test_builtin_suites_pass(suite):
    results = property_registry.run_suite(suite)
    failed = [(r.name, r.residual, r.detail) for r in results if not r.passed]
    assert not failed


@pytest.mark.parametrize("name, detail", [
    ("round_trip_w_of_v", {"cases": 6, "points": 6}),
    ("v_w_duality", {"cases": 6}),
    ("seminorm_q", {}),
])
def test_general_branch_intertwine_properties_pass(name, detail):
    result = property_registry.get(name).run()
    assert result.passed, (result.residual, result.detail)
    assert result.detail == detail
