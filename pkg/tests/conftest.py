"""Shared fixtures: orders on both branches and the standard bumps."""

import pytest
from hypothesis import HealthCheck, settings

from app.config import reload_config
from app.services import funcspace

settings.register_profile(
    "bs",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("bs")

HALF_INTEGER_ORDERS = (0.5, 1.5, 2.5)
GENERAL_ORDERS = (0.3, 1.2)

ENVIRONMENT_KEYS = (
    'BS_NODES', 'BS_MAX_NODES', 'BS_THREADS', 'BS_SERIES_WINDOW', 'BS_SERIES_MAX_TERMS',
    'BS_SERIES_REL_TOL', 'BS_AUTO_SERIES_LOSS', 'BS_TOL', 'BS_PROGRESS', 'BS_OUTPUT_FOLDER', 'LOG_LEVEL',
)


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Each test sees the default configuration."""
    for key in ENVIRONMENT_KEYS:
        monkeypatch.delenv(key, raising=False)
    reload_config()
    yield
    monkeypatch.undo()
    reload_config()


@pytest.fixture
def small_bump():
    return funcspace.make_poly_bump(1.0, 2)


@pytest.fixture
def bump():
    return funcspace.make_poly_bump(1.0, 4)


@pytest.fixture
def wide_bump():
    return funcspace.make_poly_bump(2.0, 5)


@pytest.fixture
def odd_bump():
    return funcspace.make_odd_bump(1.0, 3)


@pytest.fixture(params=HALF_INTEGER_ORDERS + GENERAL_ORDERS)
def alpha(request):
    return request.param
