"""
Standardized command output utilities.

Provides consistent CSV/JSON payloads and exit-code handling across all
CLI commands.
"""

import json
import math
import os
import sys
from functools import wraps
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from app.config import get_config
from app.errors import BesselStruveError
from app.logger import log_failure

CSV_FLOAT_FORMAT = '%.16e'


def resolve_output(path: str) -> Optional[str]:
    """Absolute output path, or None for stdout ('-')."""
    if path in (None, '', '-'):
        return None
    if not os.path.isabs(path):
        path = os.path.join(get_config().OUTPUT_FOLDER, path)
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    return path


def _emit(text: str, path: Optional[str]) -> None:
    target = resolve_output(path)
    if target is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(target, 'w', encoding='utf-8', newline='') as handle:
        handle.write(text)


def frame_to_csv(frame: pd.DataFrame) -> str:
    """17 significant digits, scientific notation, LF line endings."""
    return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')


def write_csv(frame: pd.DataFrame, path: str = '-') -> None:
    """
    Write a frame as CSV to a file or stdout.

    Args:
        frame: Table to write; integer columns stay integers
        path: Output path, '-' for stdout
    """
    _emit(frame_to_csv(frame), path)


def to_json_value(value: Any) -> Any:
    """Convert numpy scalars, complex numbers and non-finite floats to JSON-safe values."""
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_json_value(v) for v in list(value)]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': to_json_value(float(value.real)), 'im': to_json_value(float(value.imag))}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return float(f'{value:.16e}')
    return value


def dumps(payload: Any) -> str:
    """Key-sorted, indented JSON with a trailing LF."""
    return json.dumps(to_json_value(payload), sort_keys=True, indent=2) + '\n'


def write_json(payload: Any, path: str = '-') -> None:
    _emit(dumps(payload), path)


def success_response(
    data: Any = None,
    message: Optional[str] = None,
    exit_code: int = 0
) -> Dict[str, Any]:
    """
    Create a successful command report.

    Args:
        data: Report payload
        message: Optional message
        exit_code: Exit code the command returns

    Returns:
        Report dictionary
    """
    response: Dict[str, Any] = {'success': exit_code == 0, 'exit_code': exit_code}

    if data is not None:
        response['data'] = data

    if message:
        response['message'] = message

    return response


def error_response(
    message: str,
    exit_code: int = 1,
    error_code: Optional[str] = None,
    details: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """
    Create an error report.

    Args:
        message: Error message
        exit_code: Exit code (1 numerical, 2 usage)
        error_code: Optional error class name for programmatic handling
        details: Optional additional error details

    Returns:
        Report dictionary
    """
    response: Dict[str, Any] = {
        'success': False,
        'exit_code': exit_code,
        'error': message
    }

    if error_code:
        response['error_code'] = error_code

    if details:
        response['details'] = details

    return response


def report_error(message: str) -> None:
    """One-line message on stderr."""
    sys.stderr.write(f"error: {message}\n")
    sys.stderr.flush()


def handle_exceptions(f):
    """
    Decorator mapping exceptions in command handlers to exit codes.

    Usage:
        @handle_exceptions
        def run(args):
            ...
            return 0
    """
    command = f.__module__.rsplit('.', 1)[-1]

    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except BesselStruveError as e:
            log_failure(command, e, e.exit_code)
            report_error(str(e))
            return e.exit_code
        except ValueError as e:
            report_error(str(e))
            return 2
        except FileNotFoundError as e:
            report_error(f"not found: {e.filename or e}")
            return 2
        except Exception as e:
            log_failure(command, e, 1)
            report_error(f"internal error: {e}")
            return 1
    return decorated_function
