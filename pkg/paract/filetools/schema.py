"""JSON documents read and written by paract.

    group           {"order": n, "mul": [[...], ...]}  or a built-in name such as "Z4"
    partial_action  {"group": <group>, "space_size": m, "graphs": {"<g>": [[x, y], ...]}, "labels": [...]}
    global_action   {"group": <group>, "space_size": m, "perm": {"<g>": [...]}, "labels": [...]}

An instance file is one of these with a "kind" (inferred when missing) and an optional
"name". Labels are optional, one JSON value per point; a Bernoulli point is labelled by the
list of its values on the group elements 0..n-1.
"""
import logging
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from paract.config import settings
from paract.core.actions import GlobalAction, PartialAction, validate_global_action
from paract.core.groups import FiniteGroup, named_group, validate_group
from paract.errors import BadParams, SchemaError, TooLarge
from paract.filetools.json_file import read_json

logger = logging.getLogger(__name__)

Kind = Literal['group', 'partial_action', 'global_action']


class GroupModel(BaseModel):
    model_config = ConfigDict(extra='forbid')
    order: int = Field(ge=1)
    mul: list[list[int]]

    @model_validator(mode='after')
    def _square(self):
        if len(self.mul) != self.order or any(len(row) != self.order for row in self.mul):
            raise ValueError(f'mul must be a {self.order}x{self.order} table')
        return self


GroupSpec = Union[str, GroupModel]


class InstanceFile(BaseModel):
    model_config = ConfigDict(extra='forbid')
    kind: Kind
    name: Optional[str] = None
    # group
    order: Optional[int] = None
    mul: Optional[list[list[int]]] = None
    # actions
    group: Optional[GroupSpec] = None
    space_size: Optional[int] = Field(default=None, ge=1)
    graphs: Optional[dict[int, list[tuple[int, int]]]] = None
    perm: Optional[dict[int, list[int]]] = None
    labels: Optional[list[Any]] = None

    @model_validator(mode='before')
    @classmethod
    def _infer_kind(cls, data):
        if isinstance(data, dict) and 'kind' not in data:
            if 'graphs' in data:   data = {**data, 'kind': 'partial_action'}
            elif 'perm' in data:   data = {**data, 'kind': 'global_action'}
            elif 'mul' in data:    data = {**data, 'kind': 'group'}
        return data

    @model_validator(mode='after')
    def _fields_for_kind(self):
        required = {
            'group': ('order', 'mul'),
            'partial_action': ('group', 'space_size', 'graphs'),
            'global_action': ('group', 'space_size', 'perm'),
        }[self.kind]
        missing = [f for f in required if getattr(self, f) is None]
        if missing:
            raise ValueError(f'{self.kind} needs {", ".join(missing)}')
        if self.kind == 'group' and (len(self.mul) != self.order or any(len(r) != self.order for r in self.mul)):
            raise ValueError(f'mul must be a {self.order}x{self.order} table')
        return self

    def dump(self) -> dict:
        return self.model_dump(mode='json', exclude_none=True)


"""Loading"""
def resolve_group(spec: GroupSpec) -> FiniteGroup:
    if isinstance(spec, str):
        group = named_group(spec)
    else:
        group = validate_group(spec.mul)
    if group.order > settings.max_group_order:
        raise TooLarge(f'group order {group.order} exceeds {settings.max_group_order}')
    return group


def parse_instance(data: Any) -> InstanceFile:
    try:
        return InstanceFile.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f'invalid instance file: {e.errors(include_url=False)}') from None


def load_instance(data: Any) -> Union[FiniteGroup, PartialAction, GlobalAction]:
    """Parse and build the object an instance file describes"""
    inst = parse_instance(data)
    if inst.kind == 'group':
        return resolve_group(GroupModel(order=inst.order, mul=inst.mul))

    group = resolve_group(inst.group)
    if inst.space_size > settings.max_space_size:
        raise TooLarge(f'space size {inst.space_size} exceeds {settings.max_space_size}')
    table = inst.graphs if inst.kind == 'partial_action' else inst.perm
    unknown = [g for g in table if not 0 <= g < group.order]
    if unknown:
        raise BadParams(f'group elements {unknown} out of range 0..{group.order-1}')

    if inst.kind == 'partial_action':
        return PartialAction(group, inst.space_size, inst.graphs, inst.labels)
    if sorted(inst.perm) != list(group.elements):
        raise BadParams('a global action needs a permutation for every group element')
    perm = [inst.perm[g] for g in group.elements]
    return validate_global_action(GlobalAction(group, inst.space_size, perm, inst.labels))


def read_instance(filepath: str) -> Union[FiniteGroup, PartialAction, GlobalAction]:
    try:
        data = read_json(filepath)
    except ValueError as e:
        raise SchemaError(f'{filepath} is not valid JSON: {e}') from None
    logger.debug('read %s', filepath)
    return load_instance(data)


"""Encoding"""
def encode_group(group: FiniteGroup) -> dict:
    return {'order': group.order, 'mul': group.to_table()}


def _labels(obj) -> Optional[list]:
    return None if obj.labels is None else [_jsonable(v) for v in obj.labels]

def _jsonable(v):
    return [_jsonable(w) for w in v] if isinstance(v, tuple) else v


def dump_instance(obj: Union[FiniteGroup, PartialAction, GlobalAction], name: Optional[str] = None) -> dict:
    """Instance file of a group or an action, as plain JSON data"""
    if isinstance(obj, FiniteGroup):
        data = {'kind': 'group', **encode_group(obj)}
    elif isinstance(obj, PartialAction):
        data = {
            'kind': 'partial_action',
            'group': encode_group(obj.group),
            'space_size': obj.space_size,
            'graphs': {str(g): [list(p) for p in graph] for g, graph in enumerate(obj.graphs)},
            'labels': _labels(obj),
        }
    elif isinstance(obj, GlobalAction):
        data = {
            'kind': 'global_action',
            'group': encode_group(obj.group),
            'space_size': obj.space_size,
            'perm': {str(g): list(p) for g, p in enumerate(obj.perm)},
            'labels': _labels(obj),
        }
    else:
        raise TypeError(f'cannot encode {type(obj).__name__}')
    if name is not None:
        data['name'] = name
    return parse_instance(data).dump()


class ResultFile(BaseModel):
    """What every command except gen prints"""
    model_config = ConfigDict(extra='forbid')
    command: str
    result: dict[str, Any]
