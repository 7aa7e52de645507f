"""Orbit spaces X/~H of a partial action and the maps between them."""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from paract.core.actions import Marker, PartialAction, saturate
from paract.core.groups import Subgroup
from paract.core.union_find import partition_index
from paract.errors import InvalidPartialAction, NotNested

logger = logging.getLogger(__name__)

NotSeparable = Marker('NotSeparable')


@dataclass(frozen=True)
class OrbitQuotient:
    """Partition of X into H-orbits; class_of realizes the quotient map pi_H.

    Classes are sorted tuples ordered by their least point, so the least point of
    each class is its representative.
    """
    parent: PartialAction
    subgroup: Subgroup
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self):
        return len(self.classes)

    def representative(self, c: int) -> int:
        return self.classes[c][0]

    def project(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(self.class_of[x] for x in points)

    def preimage(self, classes: Iterable[int]) -> frozenset[int]:
        return frozenset(x for c in classes for x in self.classes[c])

    def to_dict(self) -> dict:
        pa = self.parent
        return {
            'subgroup': sorted(self.subgroup),
            'classes': [[pa.label(x) for x in c] for c in self.classes],
            'class_of': list(self.class_of),
        }


def orbit(pa: PartialAction, x: int, H: Optional[Iterable[int]] = None) -> frozenset[int]:
    """H^x.x: every point one defined step away from x"""
    H = pa.group.whole if H is None else H
    return frozenset(pa.maps[h][x] for h in H if x in pa.maps[h])


def orbit_quotient(pa: PartialAction, H: Optional[Iterable[int]] = None) -> OrbitQuotient:
    """X/~H, computed from one-step orbits.

    For a partial action the one-step orbits already form a partition; if they do
    not, pa breaks the axioms and InvalidPartialAction is raised.
    """
    H = pa.group.ensure_subgroup(pa.group.whole if H is None else H)
    orbits = [orbit(pa, x, H) for x in pa.points]
    for x, o in enumerate(orbits):
        if x not in o or any(orbits[y] != o for y in o):
            raise InvalidPartialAction(f'orbit of point {x} under {sorted(H)} is not an equivalence class')
    classes = sorted({tuple(sorted(o)) for o in orbits}, key=lambda c: c[0])
    logger.debug('%d orbits of %d points under a subgroup of order %d', len(classes), pa.space_size, len(H))
    return OrbitQuotient(pa, H, tuple(classes), partition_index(classes))


def connect(fine: OrbitQuotient, coarse: OrbitQuotient) -> tuple[int, ...]:
    """The map pi_{H1,H2} between two quotients of the same action, H1 inside H2"""
    if fine.parent != coarse.parent or not fine.subgroup <= coarse.subgroup:
        raise NotNested(f'{sorted(fine.subgroup)} is not contained in {sorted(coarse.subgroup)}')
    image = []
    for c in fine.classes:
        targets = {coarse.class_of[x] for x in c}
        if len(targets) != 1:
            raise NotNested('finer class is split by the coarser quotient')
        image.append(targets.pop())
    return tuple(image)


def connecting_map(pa: PartialAction, H1: Iterable[int], H2: Iterable[int]) -> tuple[int, ...]:
    """pi_{H1,H2}: X/~H1 -> X/~H2, the unique map with pi_H2 = pi_{H1,H2} o pi_H1"""
    G = pa.group
    H1, H2 = G.ensure_subgroup(H1), G.ensure_subgroup(H2)
    if not H1 <= H2:
        raise NotNested(f'{sorted(H1)} is not contained in {sorted(H2)}')
    return connect(orbit_quotient(pa, H1), orbit_quotient(pa, H2))


def invariant_separator(pa: PartialAction, x: int, y: int):
    """An invariant set A with x in A and y outside, whose complement is invariant too.

    In a finite discrete space the clopen neighbourhood {x} already works, so
    A = G^{x}.{x}. Returns NotSeparable when x ~ y.
    """
    A = saturate(pa, {x})
    if y in A:
        return NotSeparable
    return A
