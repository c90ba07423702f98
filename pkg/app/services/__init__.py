"""Numerical service modules for the Bessel-Struve toolkit."""

from app.services import funcspace, intertwine, kernel, numerics, paley_wiener, transforms

__all__ = [
    'numerics',
    'kernel',
    'funcspace',
    'intertwine',
    'transforms',
    'paley_wiener',
]
