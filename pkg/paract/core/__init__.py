from .groups import (
    FiniteGroup, Subgroup, validate_group, named_group,
    cyclic, dihedral, symmetric3, klein4, quaternion8,
)
from .actions import (
    PartialAction, GlobalAction, Marker, Undefined,
    act, saturate, is_invariant, is_free, restrict_to_subgroup,
    induce_from_global, hat_action, validate_global_action,
    require_valid,
)
from .axioms import ValidationReport, Violation, validate_partial_action
from .union_find import UnionFind, partition_index
