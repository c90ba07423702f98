"""Tests for CSV/JSON output and exit-code mapping."""

import json

import numpy as np
import pandas as pd

from app.errors import OrderError, WindowError
from app.utils.responses import dumps, error_response, frame_to_csv, handle_exceptions, success_response


def test_csv_format():
    frame = pd.DataFrame({'x': [1.0, -0.5], 'n': [1, 2]})
    text = frame_to_csv(frame)
    assert text == 'x,n\n1.0000000000000000e+00,1\n-5.0000000000000000e-01,2\n'


def test_json_sorted_with_non_finite_values():
    text = dumps({'b': float('nan'), 'a': [np.float64(np.inf), -np.inf], 'c': 1 + 2j, 'd': np.int64(3)})
    assert text.endswith('}\n')
    payload = json.loads(text)
    assert list(payload) == ['a', 'b', 'c', 'd']
    assert payload == {'a': ['inf', '-inf'], 'b': 'nan', 'c': {'re': 1.0, 'im': 2.0}, 'd': 3}


def test_reports():
    assert success_response({'k': 1}) == {'success': True, 'exit_code': 0, 'data': {'k': 1}}
    assert success_response(exit_code=1)['success'] is False
    error = error_response('bad', exit_code=2, error_code='OrderError')
    assert error == {'success': False, 'exit_code': 2, 'error': 'bad', 'error_code': 'OrderError'}


def test_exit_code_mapping(capsys):
    def raising(exc):
        @handle_exceptions
        def command():
            raise exc
        return command()

    assert raising(OrderError('alpha')) == 2
    assert raising(WindowError('too wide')) == 1
    assert raising(ValueError('bad value')) == 2
    assert raising(FileNotFoundError(2, 'missing', 'x.json')) == 2
    assert raising(RuntimeError('boom')) == 1
    err = capsys.readouterr().err
    assert 'error: alpha' in err and 'not found: x.json' in err
