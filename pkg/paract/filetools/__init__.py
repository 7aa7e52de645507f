from .json_file import read_json, write_json, dumps
from .schema import (
    GroupModel, InstanceFile, ResultFile,
    resolve_group, parse_instance, load_instance, read_instance, encode_group, dump_instance,
)
