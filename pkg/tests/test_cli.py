"""End-to-end tests of the bs command line."""

import io
import json
import math

import numpy as np
import pandas as pd
import pytest

from app import attach_values, run_cli
from processing.properties import PropertySpec, property_registry

BUMP = '{"kind": "poly_bump", "a": 1, "m": 2}'


def run_csv(capsys, argv):
    code = run_cli(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return pd.read_csv(io.StringIO(captured.out)), captured.out


def test_attach_values():
    argv = ['kernel', '--grid', '-2:2:41', '--alpha', '-0.3', '--out', '-']
    assert attach_values(argv) == ['kernel', '--grid=-2:2:41', '--alpha=-0.3', '--out', '-']


def test_version(capsys):
    assert run_cli(['--version']) == 0
    assert 'bs 1.0.0' in capsys.readouterr().out


class TestKernelCommand:

    def test_acceptance_grid(self, capsys):
        frame, text = run_csv(capsys, ['kernel', '--alpha', '0.5', '--lambda', '1', '--grid', '-2:2:41'])
        assert len(frame) == 41
        assert list(frame.columns) == ['x', 're_series', 'im_series', 're_integral', 'im_integral', 'abs_diff']
        origin = frame.iloc[20]
        assert origin['x'] == 0.0 and origin['re_series'] == 1.0
        assert '1.0000000000000000e+00' in text
        assert frame['abs_diff'].max() <= 1e-10

    def test_single_point(self, capsys):
        frame, _ = run_csv(capsys, ['kernel', '--grid', '1:1:1'])
        assert frame['re_series'][0] == pytest.approx(math.e - 1.0, rel=1e-14)

    def test_complex_lambda(self, capsys):
        frame, _ = run_csv(capsys, ['kernel', '--lambda', '-2i', '--grid', '0.5:0.5:1'])
        assert frame['re_series'][0] == pytest.approx(math.sin(1.0), rel=1e-12)

    def test_invalid_alpha(self, capsys):
        assert run_cli(['kernel', '--alpha', '-0.6', '--grid', '0:1:3']) == 2
        assert 'alpha must exceed -1/2' in capsys.readouterr().err

    def test_invalid_grid(self, capsys):
        assert run_cli(['kernel', '--grid', '2:1:3']) == 2
        assert 'error:' in capsys.readouterr().err

    def test_invalid_threads(self, capsys):
        assert run_cli(['--threads', '0', 'kernel', '--grid', '0:1:2']) == 2

    def test_deterministic(self, capsys):
        argv = ['kernel', '--alpha', '1.2', '--lambda', '1+2i', '--grid', '-1:1:9']
        _, first = run_csv(capsys, argv)
        _, second = run_csv(capsys, argv + ['--nodes', '64'])
        assert first == second

    def test_writes_file(self, capsys, tmp_path):
        target = tmp_path / 'nested' / 'kernel.csv'
        assert run_cli(['kernel', '--grid', '0:1:3', '--out', str(target)]) == 0
        assert capsys.readouterr().out == ''
        content = target.read_bytes()
        assert b'\r\n' not in content and content.endswith(b'\n')


class TestTransformCommand:

    def test_both_routes(self, capsys):
        frame, _ = run_csv(capsys, ['transform', '--function', BUMP, '--grid', '0:2:3'])
        assert list(frame.columns) == ['lambda', 're_direct', 'im_direct', 're_factored', 'im_factored', 'abs_diff']
        assert frame['re_direct'][0] == pytest.approx(16.0 / 105.0, rel=1e-12)
        assert frame['abs_diff'].max() <= 1e-8

    def test_single_route(self, capsys):
        frame, _ = run_csv(capsys, ['transform', '--function', BUMP, '--grid', '0:1:2', '--route', 'direct'])
        assert list(frame.columns) == ['lambda', 're_direct', 'im_direct']

    def test_descriptor_from_file(self, capsys, tmp_path):
        path = tmp_path / 'f.json'
        path.write_text(BUMP)
        frame, _ = run_csv(capsys, ['transform', '--function', f'@{path}', '--grid', '0:0:1', '--route', 'factored'])
        assert frame['re_factored'][0] == pytest.approx(16.0 / 105.0, rel=1e-10)

    def test_bad_descriptor(self, capsys):
        assert run_cli(['transform', '--function', '{"kind": "sinc"}', '--grid', '0:1:2']) == 2

    def test_unknown_route(self, capsys):
        assert run_cli(['transform', '--function', BUMP, '--grid', '0:1:2', '--route', 'hankel']) == 2


class TestWeylCommand:

    def test_skips_origin(self, capsys):
        frame, _ = run_csv(capsys, ['weyl', '--function', BUMP, '--grid', '-1:1:5'])
        assert list(frame['y']) == [-1.0, -0.5, 0.5, 1.0]
        assert frame['weyl'][2] == pytest.approx(0.75 ** 3 / 6.0, rel=1e-11)
        assert frame['abs_diff'].max() <= 1e-9


class TestScanCommand:

    def test_needs_two_steps(self, capsys):
        code = run_cli(['scan', '--function', BUMP, '--re', '-1:1:1', '--im', '-1:1:3'])
        assert code == 2

    def test_needs_one_source(self, capsys):
        assert run_cli(['scan', '--re', '-1:1:3', '--im', '-1:1:3']) == 2
        assert run_cli(['scan', '--function', BUMP, '--dirac', '[[1, 0, 0]]',
                        '--re', '-1:1:3', '--im', '-1:1:3']) == 2

    def test_dirac_sidecar(self, capsys, tmp_path):
        out = tmp_path / 'delta.csv'
        argv = ['scan', '--dirac', '[[1, 0, 0]]', '--re', '-20:20:41', '--im', '-20:20:41', '--out', str(out)]
        assert run_cli(argv) == 0
        frame = pd.read_csv(out)
        assert len(frame) == 41 * 41
        np.testing.assert_allclose(frame['abs_F'], 1.0, atol=1e-13)
        fit = json.loads((tmp_path / 'delta.fit.json').read_text())
        assert fit['kind'] == 'poly_exp'
        assert fit['m'] == 0 and fit['b'] == 0.0

    def test_window(self, capsys):
        assert run_cli(['scan', '--function', BUMP, '--re', '-70:70:3', '--im', '-1:1:3']) == 1
        assert 'window' in capsys.readouterr().err


class TestVerifyCommand:

    def test_list(self, capsys):
        assert run_cli(['verify', '--suite', 'kernel', '--list']) == 0
        names = [p['name'] for p in json.loads(capsys.readouterr().out)['properties']]
        assert 'eigenfunction_residual' in names

    def test_numerics_suite(self, capsys):
        assert run_cli(['verify', '--suite', 'numerics']) == 0
        report = json.loads(capsys.readouterr().out)
        assert report['success'] and report['data']['failed'] == []

    def test_tight_tolerance_fails(self, capsys):
        assert run_cli(['verify', '--suite', 'numerics', '--tol', '1e-30']) == 1
        report = json.loads(capsys.readouterr().out)
        assert report['exit_code'] == 1 and report['data']['failed']

    def test_non_positive_tolerance(self, capsys):
        assert run_cli(['verify', '--suite', 'numerics', '--tol', '0']) == 2

    def test_unknown_suite(self, capsys):
        assert run_cli(['verify', '--suite', 'hankel']) == 2

    def test_report_written_when_property_crashes(self, capsys, tmp_path, monkeypatch):
        def runner():
            raise ValueError("singular matrix")

        crashing = PropertySpec('zz_crashing', 'numerics', 'raises a plain ValueError', 1.0, runner)
        monkeypatch.setitem(property_registry._properties, crashing.name, crashing)
        out = tmp_path / 'report.json'
        assert run_cli(['verify', '--suite', 'numerics', '--out', str(out)]) == 1
        report = json.loads(out.read_text())
        assert report['data']['failed'] == ['zz_crashing']
        entry = next(p for p in report['data']['properties'] if p['name'] == 'zz_crashing')
        assert entry['residual'] == 'inf'
        assert entry['detail']['error'] == 'ValueError: singular matrix'
