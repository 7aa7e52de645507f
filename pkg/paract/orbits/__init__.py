from .quotient import (
    OrbitQuotient, NotSeparable, orbit, orbit_quotient, connect, connecting_map, invariant_separator,
)
from .sections import (
    Section, identity_section, verify_section, section_finite,
    local_neighbourhood, clopen_cover, disjoint_refinement,
)
