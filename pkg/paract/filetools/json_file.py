import json
from typing import Any, Optional

import numpy as np

from paract.config import settings


def _default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, 'to_dict'):
        return obj.to_dict()
    raise TypeError(f'{type(obj).__name__} is not JSON serializable')


def dumps(data: Any, indent: Optional[int] = None) -> str:
    """Deterministic JSON: sorted keys, UTF-8 text"""
    indent = settings.json_indent if indent is None else indent
    return json.dumps(data, indent=indent or None, sort_keys=True, ensure_ascii=False, default=_default)


def read_json(filepath: str, **kwargs) -> dict:
    with open(filepath, 'r', encoding='utf-8') as f:
        data = json.load(f, **kwargs)
    return data

def write_json(filepath: str, data: dict, indent: Optional[int] = None):
    with open(filepath, 'w', encoding='utf-8') as f:
        f.write(dumps(data, indent) + '\n')
