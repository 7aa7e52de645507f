import json

import pytest

from paract.config import Settings
from paract.core import FiniteGroup, GlobalAction, cyclic, named_group
from paract.errors import BadParams, NonAssociative, SchemaError, TooLarge, UnknownGroup
from paract.filetools import (
    dump_instance, dumps, load_instance, parse_instance, read_instance, read_json, write_json,
)


def test_dumps_is_deterministic():
    data = {'b': [1, 2], 'a': {'y': 1, 'x': frozenset({3, 1})}}
    assert dumps(data, indent=0) == '{"a": {"x": [1, 3], "y": 1}, "b": [1, 2]}'
    assert dumps(data) == dumps(dict(reversed(list(data.items()))))

def test_dumps_unicode():
    assert dumps({'name': 'η'}, indent=0) == '{"name": "η"}'

def test_write_read_json(tmp_path):
    path = tmp_path / 'data.json'
    write_json(str(path), {'z': 1, 'a': [1, 2]})
    assert read_json(str(path)) == {'z': 1, 'a': [1, 2]}
    assert path.read_text(encoding='utf-8').index('"a"') < path.read_text(encoding='utf-8').index('"z"')


def test_partial_action_round_trip(f2, f3):
    for pa in (f2, f3):
        data = dump_instance(pa, name='fixture')
        assert data['kind'] == 'partial_action'
        assert data['name'] == 'fixture'
        assert load_instance(json.loads(dumps(data))) == pa

def test_group_round_trip():
    G = named_group('S3')
    assert load_instance(dump_instance(G)) == G

def test_global_action_round_trip():
    u = GlobalAction(cyclic(2), 2, [[0, 1], [1, 0]], labels=['a', 'b'])
    assert load_instance(dump_instance(u)) == u

def test_kind_is_inferred():
    inst = parse_instance({'group': 'Z2', 'space_size': 2, 'graphs': {'0': [[0, 0], [1, 1]]}})
    assert inst.kind == 'partial_action'
    assert parse_instance({'order': 1, 'mul': [[0]]}).kind == 'group'

def test_named_group_in_file():
    pa = load_instance({'group': 'Z4', 'space_size': 2,
                        'graphs': {'0': [[0, 0], [1, 1]], '2': [[0, 1], [1, 0]]}})
    assert pa.group == cyclic(4)
    assert pa.graphs[1] == ()

@pytest.mark.parametrize('data', [
    {'kind': 'partial_action', 'group': 'Z2', 'space_size': 2},
    {'kind': 'group', 'order': 2, 'mul': [[0, 1]]},
    {'kind': 'banana'},
    {'group': 'Z2', 'space_size': 0, 'graphs': {}},
    {'group': 'Z2', 'space_size': 2, 'graphs': {'x': []}},
    [1, 2, 3],
])
def test_schema_errors(data):
    with pytest.raises(SchemaError):
        parse_instance(data)

def test_load_errors():
    with pytest.raises(UnknownGroup):
        load_instance({'group': 'Z', 'space_size': 1, 'graphs': {'0': [[0, 0]]}})
    with pytest.raises(BadParams):
        load_instance({'group': 'Z2', 'space_size': 1, 'graphs': {'5': [[0, 0]]}})
    with pytest.raises(BadParams):
        load_instance({'group': 'Z2', 'space_size': 1, 'graphs': {'0': [[0, 3]]}})
    with pytest.raises(TooLarge):
        load_instance({'group': 'Z17', 'space_size': 1, 'graphs': {'0': [[0, 0]]}})
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NonAssociative):
        load_instance({'order': 5, 'mul': loop})

def test_read_instance_bad_json(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"group": ', encoding='utf-8')
    with pytest.raises(SchemaError):
        read_instance(str(path))

def test_read_instance(tmp_path, f3):
    path = tmp_path / 'f3.json'
    write_json(str(path), dump_instance(f3))
    assert read_instance(str(path)) == f3
    assert isinstance(read_instance(str(path)).group, FiniteGroup)


"""Configuration"""
def test_settings_from_env():
    s = Settings.from_env({'PARACT_JOBS': '4', 'PARACT_SEED': '7', 'OTHER': 'x'})
    assert (s.jobs, s.seed, s.br_order_cap) == (4, 7, 6)
    with pytest.raises(ValueError):
        Settings.from_env({'PARACT_JOBS': 'many'})

def test_settings_updated():
    s = Settings().updated(jobs=2, seed=None)
    assert s.jobs == 2 and s.seed == 0
