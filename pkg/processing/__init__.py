"""Grid evaluation pool and the verification property registry."""

from .jobs import GridEvaluationPool, make_pool
from .properties import PropertyRegistry, PropertyResult, PropertySpec, SUITES, property_registry

__all__ = [
    "GridEvaluationPool",
    "make_pool",
    "PropertyRegistry",
    "PropertyResult",
    "PropertySpec",
    "SUITES",
    "property_registry",
]
