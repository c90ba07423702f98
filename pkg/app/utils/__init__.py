"""Utility modules for the Bessel-Struve toolkit."""

from app.utils.responses import (
    dumps,
    error_response,
    frame_to_csv,
    handle_exceptions,
    success_response,
    write_csv,
    write_json,
)

__all__ = [
    'dumps',
    'error_response',
    'frame_to_csv',
    'handle_exceptions',
    'success_response',
    'write_csv',
    'write_json',
]
