"""Finite groups given by a multiplication table.

Elements are the indices 0..n-1 and the identity is always element 0.
Subgroups are passed around as frozensets of element indices.
"""
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable

import numpy as np

from paract.errors import (
    BadParams, MissingInverse, NoIdentityAtZero, NonAssociative, NotASubgroup,
    NotLatinSquare, NotNormal, UnknownGroup,
)

logger = logging.getLogger(__name__)

Subgroup = frozenset[int]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: np.ndarray

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def inverses(self) -> np.ndarray:
        """inverses[g] is the unique h with gh = 1"""
        return np.argmax(self.mul == 0, axis=1)

    def op(self, *elements: int) -> int:
        r = 0
        for g in elements:
            r = int(self.mul[r, g])
        return r

    def inv(self, g: int) -> int:
        return int(self.inverses[g])

    def conjugate(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.op(g, h, self.inv(g))

    def translate(self, g: int, subset: Iterable[int]) -> frozenset[int]:
        """The left translate gA"""
        return frozenset(int(self.mul[g, a]) for a in subset)

    """Subgroups"""
    @cached_property
    def trivial(self) -> Subgroup:
        return frozenset({0})

    @cached_property
    def whole(self) -> Subgroup:
        return frozenset(self.elements)

    def is_subgroup(self, H: Iterable[int]) -> bool:
        H = frozenset(H)
        if 0 not in H or not all(0 <= h < self.order for h in H):
            return False
        return all(self.op(a, self.inv(b)) in H for a in H for b in H)

    def ensure_subgroup(self, H: Iterable[int]) -> Subgroup:
        H = frozenset(int(h) for h in H)
        if not self.is_subgroup(H):
            raise NotASubgroup(f'{sorted(H)} is not a subgroup of a group of order {self.order}')
        return H

    def is_normal(self, H: Iterable[int]) -> bool:
        H = frozenset(H)
        return self.is_subgroup(H) and all(self.conjugate(g, h) in H for g in self.elements for h in H)

    def ensure_normal(self, H: Iterable[int]) -> Subgroup:
        H = self.ensure_subgroup(H)
        if not self.is_normal(H):
            raise NotNormal(f'{sorted(H)} is not a normal subgroup')
        return H

    def generated(self, generators: Iterable[int]) -> Subgroup:
        """Smallest subgroup containing the generators"""
        generators = [int(g) for g in generators]
        H = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in generators:
                    b = int(self.mul[a, g])
                    if b not in H:
                        H.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(H)

    @cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        """All subgroups, ordered by size and then by sorted elements"""
        found = {self.generated([g]) for g in self.elements}
        frontier = set(found)
        while frontier:
            new = set()
            for A in frontier:
                for B in found:
                    C = self.generated(A | B)
                    if C not in found:
                        new.add(C)
            found |= new
            frontier = new
        return tuple(sorted(found, key=lambda H: (len(H), sorted(H))))

    @cached_property
    def normal_subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(H for H in self.subgroups if self.is_normal(H))

    def cosets(self, H: Iterable[int]) -> list[Subgroup]:
        """Left cosets gH, ordered by their least element (H itself comes first)"""
        H = self.ensure_subgroup(H)
        seen, cosets = set(), []
        for g in self.elements:
            if g in seen:  continue
            gH = self.translate(g, H)
            seen |= gH
            cosets.append(gH)
        return cosets

    def quotient(self, H: Iterable[int]) -> tuple['FiniteGroup', tuple[int, ...], list[Subgroup]]:
        """G/H for a normal H.

        Returns the quotient group, the projection g -> index of gH and the cosets themselves.
        """
        H = self.ensure_normal(H)
        cosets = self.cosets(H)
        coset_of = [0] * self.order
        for i, c in enumerate(cosets):
            for g in c:
                coset_of[g] = i
        reps = [min(c) for c in cosets]
        table = [[coset_of[self.op(a, b)] for b in reps] for a in reps]
        return FiniteGroup.from_table(table), tuple(coset_of), cosets

    def subgroup_group(self, H: Iterable[int]) -> tuple['FiniteGroup', tuple[int, ...]]:
        """H as a group in its own right, with elements re-indexed in increasing order.

        Returns the group and the embedding (local index -> element of self).
        """
        H = self.ensure_subgroup(H)
        elements = tuple(sorted(H))
        local = {g: i for i, g in enumerate(elements)}
        table = [[local[self.op(a, b)] for b in elements] for a in elements]
        return FiniteGroup.from_table(table), elements

    """Construction"""
    @classmethod
    def from_table(cls, table) -> 'FiniteGroup':
        """Trusted construction, see validate_group for untrusted tables"""
        mul = np.array(table, dtype=np.int64)
        mul.setflags(write=False)
        return cls(mul)

    def to_table(self) -> list[list[int]]:
        return self.mul.tolist()

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.mul, other.mul)

    def __hash__(self):
        return hash((self.order, self.mul.tobytes()))

    def __repr__(self):
        return f'FiniteGroup(order={self.order})'


def validate_group(table) -> FiniteGroup:
    """Check a multiplication table and return the group.

    Raises the error of the first violated axiom, in the order
    NotLatinSquare, NoIdentityAtZero, NonAssociative, MissingInverse.
    """
    try:
        mul = np.array(table, dtype=np.int64)
    except (TypeError, ValueError):
        raise BadParams('multiplication table must be a square table of integers')
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise BadParams(f'multiplication table must be a nonempty square table, got shape {mul.shape}')
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        raise BadParams(f'table entries must lie in 0..{n-1}')

    full = np.arange(n)
    rows_ok = (np.sort(mul, axis=1) == full).all(axis=1)
    cols_ok = (np.sort(mul, axis=0) == full[:, None]).all(axis=0)
    if not rows_ok.all():
        raise NotLatinSquare(f'row {int(np.argmin(rows_ok))} is not a permutation of 0..{n-1}')
    if not cols_ok.all():
        raise NotLatinSquare(f'column {int(np.argmin(cols_ok))} is not a permutation of 0..{n-1}')

    if not (mul[0] == full).all() or not (mul[:, 0] == full).all():
        raise NoIdentityAtZero('element 0 is not a two-sided identity')

    left = mul[mul]                                  # (ab)c
    right = mul[full[:, None, None], mul[None, :, :]]  # a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = map(int, bad[0])
        raise NonAssociative(f'({a}*{b})*{c} != {a}*({b}*{c})')

    unit = mul == 0
    two_sided = unit & unit.T
    missing = np.flatnonzero(~two_sided.any(axis=1))
    if len(missing):
        raise MissingInverse(f'element {int(missing[0])} has no two-sided inverse')

    group = FiniteGroup.from_table(mul)
    logger.debug('validated group of order %d', n)
    return group


"""Built-in groups"""
def cyclic(n: int) -> FiniteGroup:
    if n < 1:  raise BadParams(f'cyclic group needs n >= 1, got {n}')
    a = np.arange(n)
    return FiniteGroup.from_table((a[:, None] + a[None, :]) % n)

def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, element r^k s^e at index k + n*e"""
    if not 1 <= n <= 8:  raise BadParams(f'dihedral group needs 1 <= n <= 8, got {n}')
    def mul(x, y):
        a, e = x % n, x // n
        b, f = y % n, y // n
        k = (a + (b if e == 0 else -b)) % n
        return k + n * ((e + f) % 2)
    return FiniteGroup.from_table([[mul(x, y) for y in range(2*n)] for x in range(2*n)])

def symmetric3() -> FiniteGroup:
    perms = list(permutations(range(3)))  # identity first
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    return FiniteGroup.from_table([[index[compose(p, q)] for q in perms] for p in perms])

def klein4() -> FiniteGroup:
    return FiniteGroup.from_table([[a ^ b for b in range(4)] for a in range(4)])

def quaternion8() -> FiniteGroup:
    """Elements 1, -1, i, -i, j, -j, k, -k"""
    units = {  # (u, v) -> (sign, unit) for u*v, with 0=1, 1=i, 2=j, 3=k
        (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    def mul(x, y):
        u, su = divmod(x, 2)
        v, sv = divmod(y, 2)
        if u == 0:    sign, w = 1, v
        elif v == 0:  sign, w = 1, u
        else:         sign, w = units[(u, v)]
        negative = (sign < 0) ^ bool(su) ^ bool(sv)
        return 2*w + negative
    return FiniteGroup.from_table([[mul(x, y) for y in range(8)] for x in range(8)])


def named_group(name: str) -> FiniteGroup:
    """Z<n>, C<n>, D<n>, S3, V4, Q8 or 'trivial'"""
    key = name.strip().upper()
    if key == 'TRIVIAL':  return cyclic(1)
    if key == 'S3':       return symmetric3()
    if key == 'V4':       return klein4()
    if key == 'Q8':       return quaternion8()
    m = re.fullmatch(r'([ZCD])(\d+)', key)
    if m is None:
        raise UnknownGroup(f'unknown group name {name!r}; expected Z<n>, D<n>, S3, V4, Q8 or trivial')
    kind, n = m.group(1), int(m.group(2))
    return dihedral(n) if kind == 'D' else cyclic(n)
