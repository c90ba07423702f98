"""
Application configuration module.

Provides environment-based configuration for the Bessel-Struve toolkit.
All settings can be overridden via environment variables.
"""

import os
from dataclasses import dataclass, field

from app.errors import ConfigurationError


def get_bool_env(key: str, default: bool = False) -> bool:
    """Get boolean value from environment variable."""
    value = os.getenv(key, str(default)).lower()
    return value in ('true', '1', 'yes', 'on')


def get_int_env(key: str, default: int) -> int:
    """Get integer value from environment variable."""
    try:
        return int(os.getenv(key, str(default)))
    except ValueError:
        return default


def get_float_env(key: str, default: float) -> float:
    """Get float value from environment variable."""
    try:
        return float(os.getenv(key, repr(default)))
    except ValueError:
        return default


def _default_threads() -> int:
    return max(1, min(8, os.cpu_count() or 1))


@dataclass
class Config:
    """Toolkit configuration with environment variable support."""

    # Quadrature settings
    DEFAULT_NODES: int = field(default_factory=lambda: get_int_env('BS_NODES', 64))
    MAX_NODES: int = field(default_factory=lambda: get_int_env('BS_MAX_NODES', 512))

    # Worker pool
    THREADS: int = field(default_factory=lambda: get_int_env('BS_THREADS', _default_threads()))

    # Series evaluation of j_alpha / h_alpha
    SERIES_WINDOW: float = field(default_factory=lambda: get_float_env('BS_SERIES_WINDOW', 60.0))
    SERIES_MAX_TERMS: int = field(default_factory=lambda: get_int_env('BS_SERIES_MAX_TERMS', 300))
    SERIES_REL_TOL: float = field(default_factory=lambda: get_float_env('BS_SERIES_REL_TOL', 1e-17))

    # Cancellation budget (natural-log units) for route='auto'
    AUTO_SERIES_LOSS: float = field(default_factory=lambda: get_float_env('BS_AUTO_SERIES_LOSS', 9.0))

    # Verification settings
    DEFAULT_TOL: float = field(default_factory=lambda: get_float_env('BS_TOL', 1e-8))
    SHOW_PROGRESS: bool = field(default_factory=lambda: get_bool_env('BS_PROGRESS', False))

    # Output settings
    OUTPUT_FOLDER: str = field(default_factory=lambda: os.getenv('BS_OUTPUT_FOLDER', '.'))

    # Logging settings
    LOG_LEVEL: str = field(default_factory=lambda: os.getenv('LOG_LEVEL', 'WARNING'))
    LOG_FORMAT: str = field(
        default_factory=lambda: os.getenv(
            'LOG_FORMAT',
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
    )

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.DEFAULT_NODES < 8:
            raise ConfigurationError(f"Invalid default node count: {self.DEFAULT_NODES}")
        if self.MAX_NODES < self.DEFAULT_NODES:
            raise ConfigurationError(f"Invalid max node count: {self.MAX_NODES}")
        if self.THREADS < 1:
            raise ConfigurationError(f"Invalid thread count: {self.THREADS}")
        if self.SERIES_WINDOW <= 0:
            raise ConfigurationError(f"Invalid series window: {self.SERIES_WINDOW}")
        if self.SERIES_MAX_TERMS < 1:
            raise ConfigurationError(f"Invalid series term cap: {self.SERIES_MAX_TERMS}")
        if self.SERIES_REL_TOL <= 0 or self.DEFAULT_TOL <= 0:
            raise ConfigurationError("Tolerances must be positive")


# Global configuration instance
config = Config()


def get_config() -> Config:
    """Get the global configuration instance."""
    return config


def reload_config() -> Config:
    """Reload configuration from environment variables."""
    global config
    config = Config()
    return config
