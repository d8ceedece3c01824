import json
import os

import pytest

from horadam import cli
from horadam.checks import Fails
from horadam.config import load_settings
from horadam.report import CheckRecord, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize('argv, expected', [
    (('term', 'F', '10'), '55'),
    (('term', 'F', '10', '--recurrence'), '55'),
    (('term', 'J', '-1'), '1/2'),
    (('term', 'j', '-4', '--closed-form'), '17/16'),
    (('term', 'L', '-3', '--closed-form'), '-4'),
    (('term', '1,2,1/2,1', '2'), '2'),
    (('term', '3,-2,1,4', '-1'), '-1/2'),
    (('term', 'X', '2'), '10'),
])
def test_term(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize('argv', [
    ('term', 'Z', '3'),
    ('term', '1,0,0,1', '3'),
    ('term', '1,1,0.5,1', '3'),
    ('term', '1,1,0', '3'),
    ('term', '1,1,0,1', '3', '--closed-form'),
    ('term', 'F', '3', '--closed-form'),
    ('solve', 'F', 'J', '0', '0', '1', '0', '1'),
])
def test_bad_input_exits_with_usage_error(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith('Error: ')
    assert out == ''


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        cli.main(['verify', '--range', 'u=5..1'])
    assert info.value.code == 2


def test_solve(capsys):
    code, out, _ = run(capsys, 'solve', 'F', 'L', '0', '0', '1', '0', '1', '--json')
    assert code == 0
    assert json.loads(out) == {'lambda1': '-1/2', 'lambda2': '1/2'}
    code, out, _ = run(capsys, 'solve', 'F', 'L', '0', '0', '1', '2', '2')
    assert code == 0
    assert out.startswith('Skipped: ZeroDenominator')


def test_verify_jsonl(capsys):
    code, out, _ = run(capsys, 'verify', '--ids', 'catalan-F', '--format', 'jsonl')
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 170
    assert lines[-1]['totals'] == {'Holds': 169, 'Fails': 0, 'Skipped': 0}
    assert lines[-1]['passed'] is True


def test_verify_summary_with_ranges(capsys):
    code, out, _ = run(capsys, 'verify', '--ids', 'three-square-L', '--range', 'u=-5..5', '--range', 'v=-5..5')
    assert code == 0
    assert 'SUMMARY: 1/1 identities passed, 121 checks' in out


def test_verify_output_is_reproducible(tmp_path, capsys):
    paths = [tmp_path / 'first.jsonl', tmp_path / 'second.jsonl']
    for path in paths:
        code, _, _ = run(capsys, 'verify', '--ids', 'mixed-at-c-J,weighted-sum-j-3', '--max-tuples', '300',
                         '--format', 'jsonl', '--out', str(path))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_unknown_ids(capsys):
    code, _, err = run(capsys, 'verify', '--ids', 'catalan-F,bogus,other')
    assert code == 2
    assert 'bogus, other' in err


def test_verify_exit_code_on_failure(monkeypatch, capsys):
    def failing_grid(ids, grid, workers=1):
        return VerificationReport('grid', records=[CheckRecord.of('catalan-F', {'a': 0, 'd': 0}, Fails(1, 2))])

    monkeypatch.setattr(cli, 'run_grid', failing_grid)
    code, out, _ = run(capsys, 'verify', '--ids', 'catalan-F')
    assert code == 1
    assert '✗ catalan-F' in out


def test_fuzz(capsys):
    code, out, _ = run(capsys, 'fuzz', '--seed', '42', '--count', '20', '--format', 'jsonl')
    assert code == 0
    totals = json.loads(out.splitlines()[-1])
    assert totals['seed'] == 42
    assert sum(totals['totals'].values()) == 220


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, 'catalog')
    assert code == 0
    assert len(out.splitlines()) == 118
    code, out, _ = run(capsys, 'catalog', '--show', 'three-square-j', 'lucas-double')
    assert 'w = u+v' in out
    assert 'double-L' in out
    code, out, _ = run(capsys, 'catalog', '--manifest')
    assert '118 identities' in out


def test_quiet_environment_silences_progress(monkeypatch, capsys):
    monkeypatch.setenv('HORADAM_QUIET', '1')
    _, _, err = run(capsys, 'verify', '--ids', 'double-L')
    assert err == ''


def test_progress_goes_to_stderr(capsys):
    _, out, err = run(capsys, 'verify', '--ids', 'double-L', '--format', 'jsonl')
    assert '[verify]' in err
    assert '[verify]' not in out


def test_bad_environment_setting(monkeypatch, capsys):
    monkeypatch.setenv('HORADAM_MAX_TUPLES', 'lots')
    code, _, err = run(capsys, 'verify', '--ids', 'double-L')
    assert code == 2
    assert 'HORADAM_MAX_TUPLES' in err


def test_workers_default_to_cpu_count(monkeypatch):
    monkeypatch.delenv('HORADAM_WORKERS', raising=False)
    assert load_settings().workers == (os.cpu_count() or 1)
    monkeypatch.setenv('HORADAM_WORKERS', '3')
    assert load_settings().workers == 3


def test_verify_passes_settings_workers_to_the_grid(monkeypatch, capsys):
    seen = {}

    def recording_grid(ids, grid, workers=1):
        seen['workers'] = workers
        return VerificationReport('grid')

    monkeypatch.setattr(cli, 'run_grid', recording_grid)
    monkeypatch.setenv('HORADAM_WORKERS', '5')
    assert run(capsys, 'verify', '--ids', 'double-L')[0] == 0
    assert seen['workers'] == 5
    assert run(capsys, 'verify', '--ids', 'double-L', '--workers', '2')[0] == 0
    assert seen['workers'] == 2
