"""The Birget-Rhodes expansion of a finite group: pairs (A, g) with {1, g} inside A,
multiplied by (A, g)(B, h) = (A u gB, gh).

For verification the monoid is encoded with A as a bitmask and multiplied through a numpy
Cayley table.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from paract.config import settings
from paract.core.groups import FiniteGroup
from paract.errors import BadParams, GroupMismatch, TooLarge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BRElement:
    group: FiniteGroup
    A: frozenset[int]
    g: int

    def __post_init__(self):
        object.__setattr__(self, 'A', frozenset(int(a) for a in self.A))
        if not {0, self.g} <= self.A:
            raise BadParams(f'({sorted(self.A)}, {self.g}) does not contain 1 and {self.g}')
        if not all(0 <= a < self.group.order for a in self.A):
            raise BadParams(f'{sorted(self.A)} is not a subset of the group')

    @property
    def mask(self) -> int:
        return sum(1 << a for a in self.A)

    def __mul__(self, other: 'BRElement') -> 'BRElement':
        return br_mul(self, other)

    def __repr__(self):
        return f'({sorted(self.A)}, {self.g})'


def br_mul(a: BRElement, b: BRElement) -> BRElement:
    if a.group != b.group:
        raise GroupMismatch('Birget-Rhodes elements over different groups')
    G = a.group
    return BRElement(G, a.A | G.translate(a.g, b.A), G.op(a.g, b.g))

def br_identity(group: FiniteGroup) -> BRElement:
    return BRElement(group, frozenset({0}), 0)

def br_inverse(a: BRElement) -> BRElement:
    """(g^-1 A, g^-1)"""
    G = a.group
    g_inv = G.inv(a.g)
    return BRElement(G, G.translate(g_inv, a.A), g_inv)

def br_count(n: int) -> int:
    """2^(n-1) + (n-1) 2^(n-2)"""
    return 1 if n == 1 else 2**(n-1) + (n-1) * 2**(n-2)


def br_enumerate(group: FiniteGroup) -> list[BRElement]:
    """Every (A, g), grouped by g and then by the size and content of A"""
    elements = []
    for g in group.elements:
        required = {0, g}
        rest = [a for a in group.elements if a not in required]
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                elements.append(BRElement(group, frozenset(required | set(extra)), g))
    return elements


"""Verification"""
@dataclass
class BRReport:
    order: int
    count: int
    expected_count: int
    idempotents: int = 0
    failures: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.count == self.expected_count and not any(self.failures.values())

    def to_dict(self) -> dict:
        return {
            'order': self.order,
            'count': self.count,
            'expected_count': self.expected_count,
            'idempotents': self.idempotents,
            'ok': self.ok,
            'failures': {k: [list(map(int, t)) for t in v[:10]] for k, v in self.failures.items()},
        }


def br_table(group: FiniteGroup, elements: list[BRElement]) -> np.ndarray:
    """Cayley table on element indices; -1 where a product falls outside the list"""
    n = group.order
    shift = np.zeros((n, 2**n), dtype=np.int64)   # shift[g, mask] = mask of gB
    for mask in range(2**n):
        members = [b for b in range(n) if mask >> b & 1]
        for g in range(n):
            shift[g, mask] = sum(1 << group.op(g, b) for b in members)
    index = {(e.mask, e.g): i for i, e in enumerate(elements)}
    masks = np.array([e.mask for e in elements])
    gs = np.array([e.g for e in elements])
    table = np.full((len(elements), len(elements)), -1, dtype=np.int64)
    for i in range(len(elements)):
        prod_masks = masks[i] | shift[gs[i], masks]
        prod_gs = group.mul[gs[i], gs]
        table[i] = [index.get((int(m), int(h)), -1) for m, h in zip(prod_masks, prod_gs)]
    return table


def br_verify_inverse_monoid(group: FiniteGroup, cap: Optional[int] = None) -> BRReport:
    """Closure, associativity, identity, unique inverses (g^-1 A, g^-1) and commuting idempotents"""
    cap = settings.br_order_cap if cap is None else cap
    if group.order > cap:
        raise TooLarge(f'monoid verification is capped at order {cap}, got {group.order}')
    elements = br_enumerate(group)
    N = len(elements)
    report = BRReport(group.order, N, br_count(group.order))
    T = br_table(group, elements)

    report.failures['closure'] = [tuple(ij) for ij in np.argwhere(T < 0)]
    if report.failures['closure']:
        return report

    full = np.arange(N)
    left = T[T]                                   # (ab)c
    right = T[full[:, None, None], T[None, :, :]]  # a(bc)
    report.failures['associativity'] = [tuple(t) for t in np.argwhere(left != right)[:10]]

    e = elements.index(br_identity(group))
    report.failures['identity'] = [(int(a),) for a in np.flatnonzero((T[e] != full) | (T[:, e] != full))]

    index = {el: i for i, el in enumerate(elements)}
    star = np.array([index[br_inverse(el)] for el in elements])
    aba = T[T, full[:, None]]          # aba[a, b] = (ab)a
    bab = T[T.T, full[None, :]]        # bab[a, b] = (ba)b
    is_inverse = (aba == full[:, None]) & (bab == full[None, :])
    expected = np.zeros_like(is_inverse)
    expected[full, star] = True
    report.failures['inverse'] = [(int(a),) for a in np.flatnonzero((is_inverse != expected).any(axis=1))]

    idempotents = np.flatnonzero(T[full, full] == full)
    report.idempotents = len(idempotents)
    sub = T[np.ix_(idempotents, idempotents)]
    report.failures['idempotents_commute'] = [
        (int(idempotents[i]), int(idempotents[j])) for i, j in np.argwhere(sub != sub.T)
    ]
    not_unit = [int(i) for i in idempotents if elements[i].g != 0]
    report.failures['idempotents_are_units'] = [(i,) for i in not_unit]

    logger.debug('verified Birget-Rhodes monoid with %d elements', N)
    return report
