"""Chains of normal subgroups G = N_0 > N_1 > ... > N_k = {1}.

A finite group with such a chain is the finite stand-in for a profinite filtration.
"""
import logging
from dataclasses import dataclass
from typing import Iterable

from paract.core.groups import FiniteGroup, Subgroup
from paract.errors import BadParams, InvalidChain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalChain:
    group: FiniteGroup
    chain: tuple[Subgroup, ...]

    def __post_init__(self):
        object.__setattr__(self, 'chain', validate_chain(self.group, self.chain))

    def __len__(self):
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)

    def steps(self):
        """Consecutive pairs (N_i, N_{i+1})"""
        return zip(self.chain, self.chain[1:])

    def to_list(self) -> list[list[int]]:
        return [sorted(N) for N in self.chain]


def validate_chain(group: FiniteGroup, chain: Iterable[Iterable[int]]) -> tuple[Subgroup, ...]:
    chain = tuple(frozenset(int(g) for g in N) for N in chain)
    if not chain:
        raise InvalidChain('a chain needs at least one term')
    if chain[0] != group.whole:
        raise InvalidChain('a chain must start at the whole group')
    if chain[-1] != group.trivial:
        raise InvalidChain('a chain must end at the trivial subgroup')
    for N in chain:
        if not group.is_normal(N):
            raise InvalidChain(f'{sorted(N)} is not a normal subgroup')
    for N, M in zip(chain, chain[1:]):
        if not M < N:
            raise InvalidChain(f'{sorted(M)} is not a proper subgroup of {sorted(N)}')
    return chain


def build_chain(group: FiniteGroup) -> NormalChain:
    """Descend by maximal proper normal subgroups of G, taking the least one (as a sorted
    element list) whenever there is a choice"""
    normal = group.normal_subgroups
    chain = [group.whole]
    while chain[-1] != group.trivial:
        current = chain[-1]
        below = [K for K in normal if K < current]
        maximal = [K for K in below if not any(K < L for L in below)]
        chain.append(min(maximal, key=sorted))
    logger.debug('normal chain of length %d for a group of order %d', len(chain), group.order)
    return NormalChain(group, tuple(chain))


def parse_chain(text: str, group: FiniteGroup) -> NormalChain:
    """'0,1,2,3;0,2;0' -> NormalChain"""
    try:
        terms = [[int(g) for g in term.split(',') if g.strip()] for term in text.split(';')]
    except ValueError:
        raise BadParams(f'cannot parse chain {text!r}; expected "g,g;g,...;0"')
    return NormalChain(group, tuple(frozenset(t) for t in terms))
