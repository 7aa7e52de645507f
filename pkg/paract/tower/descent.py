"""Orbit spaces along a normal chain, their inverse limit, and the descent that builds a
section of pi_G one chain step at a time.

A pair (N, r) means: N a normal subgroup, r a section of pi_{N,G}. The pairs are ordered by
(N, r) <= (N', r')  iff  N' is inside N and pi_{N',N} o r' = r.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from paract.core.actions import PartialAction, is_free
from paract.core.groups import Subgroup
from paract.errors import GroupMismatch, InvalidPartialAction, NotASection, NotFree, NotNested
from paract.globalization.transfer import lift_section_through
from paract.orbits.quotient import OrbitQuotient, connect, orbit_quotient
from paract.orbits.sections import Section, identity_section, verify_section
from paract.tower.chain import NormalChain, build_chain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerQuotients:
    base: PartialAction
    chain: NormalChain
    levels: tuple[OrbitQuotient, ...]
    bonds: tuple[tuple[int, ...], ...]   # bonds[i]: X/~N_{i+1} -> X/~N_i

    def compose(self, j: int, i: int) -> tuple[int, ...]:
        """Bond chain from level j down to level i (i <= j)"""
        current = tuple(range(len(self.levels[j])))
        for k in range(j - 1, i - 1, -1):
            current = tuple(self.bonds[k][c] for c in current)
        return current


def _same_group(pa: PartialAction, chain: NormalChain):
    if chain.group != pa.group:
        raise GroupMismatch('the chain belongs to a different group')


def build_tower(pa: PartialAction, chain: Optional[NormalChain] = None) -> TowerQuotients:
    chain = chain or build_chain(pa.group)
    _same_group(pa, chain)
    levels = tuple(orbit_quotient(pa, N) for N in chain)
    bonds = tuple(connect(fine, coarse) for coarse, fine in zip(levels, levels[1:]))
    tq = TowerQuotients(pa, chain, levels, bonds)
    for i in range(len(levels)):
        for j in range(i, len(levels)):
            if tq.compose(j, i) != connect(levels[j], levels[i]):
                raise InvalidPartialAction('bonds do not compose')
    return tq


def inverse_limit(tq: TowerQuotients) -> list[tuple[int, ...]]:
    """Compatible families (c_0, ..., c_k) with bonds[i](c_{i+1}) = c_i"""
    families = [(c,) for c in range(len(tq.levels[0]))]
    for i, bond in enumerate(tq.bonds):
        families = [f + (c,) for f, c in product(families, range(len(tq.levels[i + 1])))
                    if bond[c] == f[-1]]
    return families


def inverse_limit_check(tq: TowerQuotients) -> bool:
    """X/~F maps bijectively onto the inverse limit, F being the last term of the chain.

    Also checks that every projection of e(X) is onto its level, which is what makes e(X)
    dense in the limit.
    """
    limit = inverse_limit(tq)
    e = [tuple(level.class_of[x] for level in tq.levels) for x in tq.base.points]
    for i, level in enumerate(tq.levels):
        if {f[i] for f in e} != set(range(len(level))):
            return False
    last = tq.levels[-1]
    e_bar = {}
    for x, family in enumerate(e):
        c = last.class_of[x]
        if e_bar.setdefault(c, family) != family:
            return False
    image = list(e_bar.values())
    return len(set(image)) == len(last) and set(image) == set(limit)


def compatibility_check(pa: PartialAction, N: Iterable[int], r: Section,
                        N_prime: Iterable[int], r_prime: Section) -> bool:
    """(N, r) <= (N', r')"""
    N, N_prime = frozenset(N), frozenset(N_prime)
    if r.to_quotient.subgroup != N or r_prime.to_quotient.subgroup != N_prime:
        return False
    if r.from_quotient != r_prime.from_quotient:
        return False
    try:
        bond = connect(r_prime.to_quotient, r.to_quotient)
    except NotNested:
        return False
    return tuple(bond[c] for c in r_prime.choice) == r.choice


def tower_descent(pa: PartialAction, chain: Optional[NormalChain] = None) -> list[tuple[Subgroup, Section]]:
    """All pairs (N_i, r_i) met while descending the chain, starting from (G, id)"""
    if not is_free(pa):
        raise NotFree('the partial action is not free')
    chain = chain or build_chain(pa.group)
    _same_group(pa, chain)
    r = identity_section(orbit_quotient(pa))
    steps = [(chain.chain[0], r)]
    for N, M in chain.steps():
        r = lift_section_through(pa, N, M, r)
        if not compatibility_check(pa, N, steps[-1][1], M, r):
            raise NotASection('descent step is not above the previous one')
        steps.append((M, r))
        logger.debug('descended to a normal subgroup of order %d', len(M))
    return steps


def tower_section(pa: PartialAction, chain: Optional[NormalChain] = None) -> Section:
    """A section of pi_G obtained by lifting id_{X/~G} down a normal chain to {1}"""
    section = tower_descent(pa, chain)[-1][1]
    if not verify_section(pa, section):
        raise NotASection('descent did not end in a section of pi_G')
    return section
