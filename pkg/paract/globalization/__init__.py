from .envelope import EnvelopingSpace, envelope, related, restriction_to_iota, check_envelope, to_dot
from .quotient_group import QuotientGroupAction, quotient_group_action, subgroup_orbits, check_homeo
from .transfer import (
    lift_section_through, section_to_envelope, section_from_envelope, section_from_two,
    canonical_splitting,
)
