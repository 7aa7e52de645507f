"""Sections of the maps between orbit spaces."""
import logging
from dataclasses import dataclass
from typing import Iterable

from paract.core.actions import PartialAction, is_free
from paract.errors import NotASection, NotFree, NotNested
from paract.orbits.quotient import OrbitQuotient, connect, orbit_quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Section:
    """A map X/~H2 -> X/~H1 (H1 inside H2) choosing, for each coarse class, a finer class inside it.

    With H1 = {1} the finer classes are single points and this is a section of pi_H2 itself.
    """
    from_quotient: OrbitQuotient
    to_quotient: OrbitQuotient
    choice: tuple[int, ...]

    def __call__(self, c: int) -> int:
        return self.choice[c]

    def points(self) -> tuple[int, ...]:
        """Representative point of every chosen class"""
        return tuple(self.to_quotient.representative(c) for c in self.choice)

    @classmethod
    def from_points(cls, coarse: OrbitQuotient, fine: OrbitQuotient, points: Iterable[int]) -> 'Section':
        """The section sending coarse class i to the finer class of points[i]"""
        return cls(coarse, fine, tuple(fine.class_of[x] for x in points))

    def to_dict(self) -> dict:
        pa = self.to_quotient.parent
        return {
            'from_subgroup': sorted(self.from_quotient.subgroup),
            'to_subgroup': sorted(self.to_quotient.subgroup),
            'choice': list(self.choice),
            'chosen': [[pa.label(x) for x in self.to_quotient.classes[c]] for c in self.choice],
        }


def identity_section(q: OrbitQuotient) -> Section:
    """The section id of pi_{H,H}"""
    return Section(q, q, tuple(range(len(q))))


def verify_section(pa: PartialAction, s: Section) -> bool:
    """True iff s is well typed over quotients of pa and pi_{H1,H2} o choice = id"""
    coarse, fine = s.from_quotient, s.to_quotient
    if coarse.parent != pa or fine.parent != pa:
        return False
    try:
        if orbit_quotient(pa, coarse.subgroup) != coarse or orbit_quotient(pa, fine.subgroup) != fine:
            return False
        bond = connect(fine, coarse)
    except NotNested:
        return False
    if len(s.choice) != len(coarse):
        return False
    if any(not (0 <= c < len(fine)) for c in s.choice):
        return False
    return all(bond[s.choice[c]] == c for c in range(len(coarse)))


"""Finite clopen-cover construction"""
def local_neighbourhood(pa: PartialAction, x: int) -> frozenset[int]:
    """V_x: the points sent into the same singleton U_g = {eta_g(x)} as x, for every g in G^x"""
    V = set(pa.points)
    for g in pa.defined_at(x):
        target = pa.maps[g][x]
        V &= {z for z, w in pa.maps[g].items() if w == target}
    return frozenset(V)


def clopen_cover(pa: PartialAction, q: OrbitQuotient) -> list[tuple[frozenset[int], dict[int, int]]]:
    """For every x, the open set pi_G(V_x) together with the inverse of pi_G on V_x"""
    cover = []
    for x in pa.points:
        V = local_neighbourhood(pa, x)
        image = q.project(V)
        if len(image) != len(V):
            raise NotFree(f'the quotient map is not injective near point {x}')
        cover.append((image, {q.class_of[v]: v for v in V}))
    return cover


def disjoint_refinement(cover: list[frozenset[int]]) -> list[tuple[int, frozenset[int]]]:
    """W_j = V_j minus everything before it; empty pieces are dropped.

    Returns (j, W_j) so every piece remembers which member of the cover it came from.
    """
    seen = set()
    pieces = []
    for j, V in enumerate(cover):
        W = frozenset(V - seen)
        seen |= V
        if W:
            pieces.append((j, W))
    return pieces


def section_finite(pa: PartialAction) -> Section:
    """A section of pi_G for a free partial action, glued from local inverses of pi_G"""
    if not is_free(pa):
        raise NotFree('the partial action is not free')
    q = orbit_quotient(pa)
    points = orbit_quotient(pa, pa.group.trivial)

    cover = clopen_cover(pa, q)
    pieces = disjoint_refinement([image for image, _ in cover])

    choice = [None] * len(q)
    for j, W in pieces:
        local_inverse = cover[j][1]
        for c in W:
            choice[c] = local_inverse[c]
    if None in choice:
        raise NotASection('refinement does not cover the orbit space')
    logger.debug('glued a section from %d pieces', len(pieces))
    return Section.from_points(q, points, choice)
