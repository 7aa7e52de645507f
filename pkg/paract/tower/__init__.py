from .chain import NormalChain, build_chain, parse_chain, validate_chain
from .descent import (
    TowerQuotients, build_tower, inverse_limit, inverse_limit_check,
    compatibility_check, tower_descent, tower_section,
)
