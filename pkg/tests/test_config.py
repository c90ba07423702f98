"""Tests for environment-driven configuration."""

import pytest

from app.config import get_config, reload_config
from app.errors import ConfigurationError
from app.services.kernel import effective_nodes


def test_defaults():
    config = get_config()
    assert config.DEFAULT_NODES == 64
    assert config.SERIES_WINDOW == 60.0
    assert config.OUTPUT_FOLDER == '.'


def test_environment_override(monkeypatch):
    monkeypatch.setenv('BS_NODES', '128')
    monkeypatch.setenv('BS_PROGRESS', 'yes')
    config = reload_config()
    assert config.DEFAULT_NODES == 128 and config.SHOW_PROGRESS
    assert effective_nodes(None, 0.0) == 128


def test_unparseable_value_falls_back(monkeypatch):
    monkeypatch.setenv('BS_NODES', 'many')
    assert reload_config().DEFAULT_NODES == 64


@pytest.mark.parametrize('key, value', [('BS_NODES', '4'), ('BS_THREADS', '0'), ('BS_SERIES_WINDOW', '-1')])
def test_invalid_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigurationError):
        reload_config()


def test_effective_nodes_grows_with_scale():
    assert effective_nodes(64, 100.0) == 132
    assert effective_nodes(64, 10_000.0) == get_config().MAX_NODES
