import json

import pytest
from click.testing import CliRunner

from cli import cli
from measurable.audits import PROPOSITIONS, Proposition


@pytest.fixture
def runner():
    return CliRunner()


def test_help_lists_commands(runner):
    result = runner.invoke(cli, ['--help'])
    assert result.exit_code == 0
    for command in ('generate', 'audit', 'sweep', 'quotient', 'spectrum', 'iso'):
        assert command in result.stdout


def test_generate(runner, write_doc, split_doc):
    result = runner.invoke(cli, ['generate', write_doc(split_doc)])
    assert result.exit_code == 0
    assert 'algebra: ∅, {a}, {b,c}, {a,b,c}' in result.stdout
    assert 'size: 4' in result.stdout
    assert 'prime_elements: {a}, {b,c}' in result.stdout


def test_generate_without_generators(runner, write_doc):
    path = write_doc({'name': 'flat', 'points': ['a', 'b'], 'generators': []})
    result = runner.invoke(cli, ['generate', path, '--format', 'structured'])
    assert result.exit_code == 0
    assert json.loads(result.stdout)['algebra'] == [[], ['a', 'b']]


def test_generate_rejects_malformed_label(runner, write_doc):
    path = write_doc({'points': ['a', 'b'], 'generators': [['q']]})
    result = runner.invoke(cli, ['generate', path])
    assert result.exit_code == 2
    assert "'q'" in result.output


def test_nested_generator_label_is_an_input_error(runner, write_doc):
    path = write_doc({'points': ['a', 'b'], 'generators': [[['a']]]})
    result = runner.invoke(cli, ['generate', path])
    assert result.exit_code == 2
    assert "['a']" in result.output


def test_audit_passes(runner, write_doc, split_doc):
    result = runner.invoke(cli, ['audit', write_doc(split_doc), '--seed', '7'])
    assert result.exit_code == 0, result.output
    assert result.stdout.endswith('status: PASS\n')
    assert '[SKIPPED] M215' in result.stdout


def test_audit_filter_structured(runner, write_doc, split_doc):
    result = runner.invoke(cli, ['audit', write_doc(split_doc), '--props', 'M215,M15',
                                 '--format', 'structured'])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert [e['id'] for e in report['entries']] == ['M15', 'M215']
    assert report['entries'][1]['status'] == 'skipped'
    assert report['seed'] == 7
    assert 'elapsed_ms' not in report['entries'][0]


def test_audit_timings(runner, write_doc, split_doc):
    result = runner.invoke(cli, ['audit', write_doc(split_doc), '--props', 'M15',
                                 '--format', 'structured', '--timings'])
    assert 'elapsed_ms' in json.loads(result.stdout)['entries'][0]


def test_audit_unknown_proposition(runner, write_doc, split_doc):
    result = runner.invoke(cli, ['audit', write_doc(split_doc), '--props', 'M999'])
    assert result.exit_code == 2
    assert 'M999' in result.output


def test_audit_corrupted_document(runner, write_doc):
    result = runner.invoke(cli, ['audit', write_doc('{"points": ["a",')])
    assert result.exit_code == 2
    assert 'line 1' in result.output


def test_audit_failure_exit_code_and_replay(runner, write_doc, split_doc, monkeypatch):
    monkeypatch.setitem(PROPOSITIONS, 'M15', Proposition('M15', 'forced', lambda ctx: 'forced witness'))
    result = runner.invoke(cli, ['audit', write_doc(split_doc), '--props', 'M15'])
    assert result.exit_code == 1
    assert 'witness: forced witness' in result.stdout
    assert 'replay a|bc:' in result.stdout
    assert result.stdout.endswith('status: FAIL\n')


def test_audit_writes_structured_twin(runner, write_doc, split_doc, tmp_path):
    out = tmp_path / 'reports' / 'split.txt'
    result = runner.invoke(cli, ['audit', write_doc(split_doc), '--props', 'M15,M290', '--out', str(out)])
    assert result.exit_code == 0
    text = out.read_text(encoding='utf-8')
    structured = json.loads((tmp_path / 'reports' / 'split.json').read_text(encoding='utf-8'))
    assert text == result.stdout
    assert [e['id'] for e in structured['entries']] == ['M15', 'M290']


def test_audit_output_is_deterministic(runner, write_doc, split_doc):
    path = write_doc(split_doc)
    first = runner.invoke(cli, ['audit', path, '--seed', '3', '--format', 'structured'])
    second = runner.invoke(cli, ['audit', path, '--seed', '3', '--format', 'structured'])
    assert first.stdout == second.stdout


def test_sweep(runner):
    result = runner.invoke(cli, ['sweep', '--max-points', '2', '--props', 'M15,M35'])
    assert result.exit_code == 0
    assert result.stdout.count('[PASS   ]') == 6


@pytest.mark.slow
def test_full_sweep_output_is_byte_identical(runner):
    first = runner.invoke(cli, ['sweep', '--max-points', '4', '--seed', '7'])
    second = runner.invoke(cli, ['sweep', '--max-points', '4', '--seed', '7'])
    assert first.exit_code == 0, first.output
    assert first.stdout_bytes == second.stdout_bytes
    assert first.stdout.endswith('status: PASS\n')


def test_sweep_range_error(runner):
    result = runner.invoke(cli, ['sweep', '--max-points', '6'])
    assert result.exit_code == 2


def test_quotient(runner, write_doc, split_doc):
    result = runner.invoke(cli, ['quotient', write_doc(split_doc), '--format', 'structured'])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload['quotient']['points'] == ['[a]', '[b,c]']
    assert payload['theta']['map'] == [['a', '[a]'], ['b', '[b,c]'], ['c', '[b,c]']]
    assert payload['status'] == 'pass'


def test_quotient_resource_cap(runner, write_doc, split_doc, monkeypatch):
    monkeypatch.setenv('AUDIT_COVER_CAP', '2')
    result = runner.invoke(cli, ['quotient', write_doc(split_doc)])
    assert result.exit_code == 3
    assert 'cap' in result.output


def test_spectrum(runner, write_doc, pair_doc):
    result = runner.invoke(cli, ['spectrum', write_doc(pair_doc), '--format', 'structured'])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload['spectrum']['points'] == ['M{a}', 'M{b}']
    assert payload['phi']['homeomorphism'] is True


def test_iso(runner, write_doc, split_doc, pair_doc):
    first = write_doc(split_doc, 'first.json')
    second = write_doc(pair_doc, 'second.json')
    result = runner.invoke(cli, ['iso', first, second])
    assert result.exit_code == 0
    assert 'rings: YES' in result.stdout
    assert 'spaces: NO' in result.stdout
    assert 'note: first space not T-measurable' in result.stdout
