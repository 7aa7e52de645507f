from .birget_rhodes import (
    BRElement, BRReport, br_mul, br_identity, br_inverse, br_count, br_enumerate,
    br_table, br_verify_inverse_monoid,
)
from .groupoid import (
    ActionGroupoid, GroupoidReport, groupoid_build, groupoid_compose, groupoid_verify,
    trivial_isotropy, to_dot,
)
