import json

import pytest
from click.testing import CliRunner

from paract.cli import suite as suite_module
from paract.cli.fixtures import gen_fixture
from paract.cli.main import cli
from paract.cli.suite import CHECKS, run_instance, run_suite
from paract.config import Settings
from paract.core import PartialAction, cyclic
from paract.errors import BadParams, UnknownFixture
from paract.filetools import ResultFile, dump_instance, parse_instance, write_json


@pytest.fixture
def runner():
    return CliRunner()

@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        write_json(str(path), obj if isinstance(obj, dict) else dump_instance(obj))
        return str(path)
    return _write


def run(runner, *args):
    result = runner.invoke(cli, list(args))
    return result, (json.loads(result.stdout) if result.stdout.startswith('{') else None)


"""Fixtures"""
def test_gen_fixtures(f2, f3):
    assert gen_fixture('bernoulli', {'group': 'Z2'}) == f2
    assert gen_fixture('subgroup-restriction', {'group': 'Z4', 'U': [0, 2]}) == f3
    trivial = gen_fixture('trivial', {'m': 5})
    assert trivial.group.order == 1 and trivial.space_size == 5

def test_gen_random_is_deterministic():
    a = gen_fixture('random-any', {'group': 'S3', 'seed': 11})
    assert a == gen_fixture('random-any', {'group': 'S3', 'seed': 11})
    free = gen_fixture('random-free', {'group': 'Z4', 'seed': 2, 'max_points': 8})
    assert free.space_size <= 8
    small = gen_fixture('random-free', {'group': 'Q8', 'seed': 1, 'max_points': 3})
    assert small.space_size <= 3

def test_gen_fixture_errors():
    with pytest.raises(UnknownFixture):
        gen_fixture('klein-bottle', {})
    with pytest.raises(BadParams):
        gen_fixture('bernoulli', {})
    with pytest.raises(BadParams):
        gen_fixture('trivial', {'m': 2, 'seed': 1})
    with pytest.raises(BadParams):
        gen_fixture('subgroup-restriction', {'group': 'Z4', 'U': [7]})
    with pytest.raises(BadParams):
        gen_fixture('bernoulli', {'group': 'Z8'})


"""Commands"""
def test_section_f3(runner, write, f3):
    result, out = run(runner, 'section', write('f3.json', f3))
    assert result.exit_code == 0
    assert out['command'] == 'section'
    assert out['result']['representatives'] in ([0], [2])
    ResultFile.model_validate(out)

def test_section_f2_not_free(runner, write, f2):
    result, out = run(runner, 'section', write('f2.json', f2))
    assert result.exit_code == 1
    assert out is None
    assert json.loads(result.stderr)['error'] == 'NotFree'

def test_validate(runner, write, f3):
    result, out = run(runner, 'validate', write('f3.json', f3))
    assert result.exit_code == 0
    assert out['result']['valid']

def test_validate_broken(runner, write):
    broken = PartialAction(cyclic(2), 2, [[(0, 0), (1, 1)], [(0, 1)]])
    result, out = run(runner, 'validate', write('broken.json', broken))
    assert result.exit_code == 1
    assert not out['result']['valid']
    assert {v['clause'] for v in out['result']['violations']} >= {'pointwise:inverse'}

@pytest.mark.parametrize('command', ['section', 'orbits', 'groupoid', 'globalize', 'tower-section'])
def test_commands_reject_invalid_actions(runner, write, command, swapped_z3):
    result, out = run(runner, command, write('bad.json', swapped_z3))
    assert result.exit_code == 1
    assert out is None
    assert json.loads(result.stderr)['error'] == 'InvalidPartialAction'

def test_malformed_input(runner, write):
    result, _ = run(runner, 'orbits', write('bad.json', {'kind': 'partial_action', 'group': 'Z2'}))
    assert result.exit_code == 2
    assert json.loads(result.stderr)['error'] == 'SchemaError'
    result, _ = run(runner, 'orbits', write('bad2.json', {'group': 'Y3', 'space_size': 1, 'graphs': {}}))
    assert result.exit_code == 2

def test_orbits(runner, write, f2, f3):
    _, out = run(runner, 'orbits', write('f2.json', f2))
    assert out['result']['classes'] == [[[1, 0]], [[1, 1]]]
    _, out = run(runner, 'orbits', write('f3.json', f3), '--subgroup', '0,2')
    assert out['result']['classes'] == [[0, 2]]
    result, _ = run(runner, 'orbits', write('f3.json', f3), '--subgroup', '0,1')
    assert result.exit_code == 1

def test_globalize(runner, write, f3):
    result, out = run(runner, 'globalize', write('f3.json', f3), '--check-hat', '--subgroup', '0,2')
    assert result.exit_code == 0
    assert out['result']['size'] == 4
    assert out['result']['iota'] == [0, 1]
    assert out['result']['failures'] == []
    assert out['result']['hat'] == {'classes_match': True, 'free': True}
    assert out['result']['quotient_group']['homeo']

def test_globalize_dot(runner, write, f3):
    result = runner.invoke(cli, ['globalize', write('f3.json', f3), '--dot'])
    assert result.stdout.startswith('digraph mu {')

def test_tower_section(runner, write, f3):
    result, out = run(runner, 'tower-section', write('f3.json', f3), '--chain', '0,1,2,3;0,2;0')
    assert result.exit_code == 0
    assert out['result']['chain'] == [[0, 1, 2, 3], [0, 2], [0]]
    assert len(out['result']['steps']) == 3
    assert out['result']['representatives'] in ([0], [2])
    result, _ = run(runner, 'tower-section', write('f3.json', f3), '--chain', '0,2;0')
    assert result.exit_code == 1

def test_br(runner):
    result, out = run(runner, 'br', 'Z2')
    assert result.exit_code == 0
    assert out['result']['count'] == 3
    assert out['result']['report']['ok']
    result, _ = run(runner, 'br', 'Z7')
    assert result.exit_code == 1

def test_groupoid(runner, write, f3):
    _, out = run(runner, 'groupoid', write('f3.json', f3))
    assert len(out['result']['groupoid']['arrows']) == 4
    assert out['result']['report']['components'] == 1
    result = runner.invoke(cli, ['groupoid', write('f3.json', f3), '--dot'])
    assert 'digraph groupoid' in result.stdout

def test_gen(runner, f3):
    result, out = run(runner, 'gen', 'subgroup-restriction', '--group', 'Z4', '--subset', '0,2')
    assert result.exit_code == 0
    assert out['name'] == 'subgroup-restriction'
    assert parse_instance(out).labels == [0, 2]
    result, _ = run(runner, 'gen', 'bernoulli')
    assert result.exit_code == 2

def test_gen_writes_file(runner, tmp_path):
    path = tmp_path / 'f2.json'
    result = runner.invoke(cli, ['gen', 'bernoulli', '--group', 'Z2', '-o', str(path)])
    assert result.exit_code == 0
    assert json.loads(path.read_text(encoding='utf-8'))['space_size'] == 2

def test_output_is_byte_identical(runner, write, f3):
    path = write('f3.json', f3)
    first = runner.invoke(cli, ['globalize', path]).stdout
    assert runner.invoke(cli, ['globalize', path]).stdout == first


"""Property suite"""
def test_run_instance_has_every_check():
    assert set(run_instance(0)) == set(CHECKS)

def test_suite_passes():
    report = run_suite(instances=12, seed=5, jobs=1)
    assert report.ok, report.to_dict()
    assert report.to_dict()['instances'] == 12

def test_suite_command(runner):
    result, out = run(runner, 'suite', '-n', '4', '--seed', '1')
    assert result.exit_code == 0
    assert out['result']['ok']

def test_suite_defaults_come_from_settings(monkeypatch):
    monkeypatch.setattr(suite_module, 'settings', Settings(suite_instances=3, seed=4, jobs=1))
    report = run_suite()
    assert (report.instances, report.seed) == (3, 4)
    assert run_suite(instances=2).instances == 2
