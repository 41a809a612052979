"""
Tests for the command line: exit codes, text output and canonical JSON.
"""

import argparse
import json

import pytest

from cli import EXIT_DISCREPANCY, EXIT_OK, EXIT_SIZE_GUARD, EXIT_VALIDATION, main, parse_position, run
from conftest import instance_path
from handlers import RunOptions, RunReport, reachable_degree, render_text, to_canonical_json
from checks import CheckReport
from instance import load_config


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    """Logs and JSON reports land in a scratch directory."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_hh_command(capsys):
    code = main(['hh', instance_path('example2-matrix-units'), '--max-degree', '2'])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert 'Hochschild homology with regular coefficients' in out
    assert out.rstrip().endswith('All assertions passed')


def test_hh_with_oracle(capsys):
    code = main(['hh', instance_path('example1-gzero'), '--max-degree', '2', '--oracle'])
    assert code == EXIT_OK
    assert '[PASS] dense_oracle' in capsys.readouterr().out


def test_morita_command(capsys):
    code = main(['morita', instance_path('c2-sparse-sandwich'), '--idempotent', '1,2'])
    assert code == EXIT_OK
    assert '[PASS] roundtrip' in capsys.readouterr().out


def test_checks_command():
    assert main(['checks', instance_path('example2-matrix-units'), '--max-degree', '2']) == EXIT_OK


def test_json_report(in_tmp):
    target = in_tmp / 'report.json'
    assert main(['hh', instance_path('example2-matrix-units'), '--max-degree', '2', '--json', str(target)]) == 0
    data = json.loads(target.read_text(encoding='utf-8'))
    assert data['passed'] is True
    assert data['sections']['homology']['homology']['A(S)'][:2] == [1, 0]
    assert data['provenance']['certified_degrees'] == [0, 1]
    assert 'timings' not in data


def test_json_does_not_depend_on_workers(in_tmp):
    outputs = []
    for workers in ('1', '2'):
        target = in_tmp / f"report-{workers}.json"
        main(['hh', instance_path('c2-sparse-sandwich'), '--max-degree', '2', '--workers', workers,
              '--json', str(target)])
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]


# === Exit codes ===

def test_bad_config_exits_2(in_tmp):
    bad = in_tmp / 'bad.conf'
    bad.write_text('group = dihedral 4\nsandwich:\ne\nend\n', encoding='utf-8')
    assert main(['hh', str(bad)]) == EXIT_VALIDATION


@pytest.mark.parametrize('body', [
    '{"group": {"kind": "cyclic", "order": "two"}, "sandwich": [["e"]]}',
    '{"group": "cyclic", "sandwich": [["e"]]}',
    '{"group": {"kind": "cyclic", "order": 2}, "groupoid": {"vertices": 1, "beta": [1], "s": ["e"], "t": ["e"]}}',
    '{"group": {"kind": "cyclic", "order": 2}, "sandwich": [["e"]], "max_degree": "x"}',
])
def test_malformed_json_config_exits_2(in_tmp, body):
    bad = in_tmp / 'bad.json'
    bad.write_text(body, encoding='utf-8')
    assert main(['hh', str(bad)]) == EXIT_VALIDATION


def test_missing_file_exits_2(in_tmp):
    assert main(['hh', str(in_tmp / 'nowhere.conf')]) == EXIT_VALIDATION


def test_degree_above_cap_exits_3():
    assert main(['hh', instance_path('example2-matrix-units'), '--max-degree', '5']) == EXIT_SIZE_GUARD


def test_degree_zero_exits_2():
    assert main(['hh', instance_path('example2-matrix-units'), '--max-degree', '0']) == EXIT_VALIDATION


def test_zero_sandwich_position_exits_2(capsys):
    code = main(['morita', instance_path('c3-sparse-sandwich'), '--idempotent', '1,2'])
    assert code == EXIT_VALIDATION
    assert 'is o' in capsys.readouterr().err


def test_chain_cap_from_config_exits_3(in_tmp):
    text = open(instance_path('c3-sparse-sandwich'), encoding='utf-8').read()
    capped = in_tmp / 'capped.conf'
    capped.write_text(text + 'chain_dim_cap = 100\n', encoding='utf-8')
    assert main(['hh', str(capped), '--max-degree', '2']) == EXIT_SIZE_GUARD


# === Helpers ===

def test_parse_position():
    assert parse_position('2,3') == (1, 2)
    for text in ('0,1', 'a,b', '1'):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_position(text)


def test_reachable_degree():
    assert reachable_degree(lambda n: 10 ** n, 5, 1000) == 3
    assert reachable_degree(lambda n: 10 ** n, 2, 1000) == 2
    assert reachable_degree(lambda n: 5000, 3, 1000) == -1


def test_run_returns_report():
    config = load_config(instance_path('rectangular-band'))
    report = run('hh', config, RunOptions(max_degree=2))
    assert report.passed
    assert 'hh' in report.timings
    assert report.sections['homology']['conjugacy_classes'] == 1


def test_canonical_json_stringifies_large_integers():
    config = load_config(instance_path('example2-matrix-units'))
    report = RunReport('hh', config, sections={'big': {'value': 2 ** 60, 'small': 7}})
    data = json.loads(to_canonical_json(report))
    assert data['sections']['big'] == {'small': 7, 'value': str(2 ** 60)}


def test_render_text_counts_failures():
    config = load_config(instance_path('example2-matrix-units'))
    report = RunReport('checks', config, checks=[
        CheckReport('one', 'x', True), CheckReport('two', 'x', False, {'why': 'rank'}),
    ])
    text = render_text(report)
    assert '[FAIL] two' in text
    assert text.rstrip().endswith('1 check(s) FAILED')
    assert not report.passed
    assert EXIT_DISCREPANCY == 1
