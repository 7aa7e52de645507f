"""Random instances.

Valid partial actions come from restricting a random global action to a random subset,
which always yields a partial action. Invalid candidates come from mutating one graph entry.
"""
import logging

import numpy as np

from paract.core.actions import GlobalAction, PartialAction, induce_from_global
from paract.core.groups import FiniteGroup

logger = logging.getLogger(__name__)


def coset_action(group: FiniteGroup, K) -> list[list[int]]:
    """Left multiplication on G/K, as permutations of the coset indices"""
    cosets = group.cosets(K)
    index = {}
    for i, c in enumerate(cosets):
        for g in c:
            index[g] = i
    reps = [min(c) for c in cosets]
    return [[index[group.op(g, r)] for r in reps] for g in group.elements]


def random_global_action(group: FiniteGroup, rng: np.random.Generator, max_points: int = 16,
                         free: bool = False) -> GlobalAction:
    """Disjoint union of random coset spaces G/K, shuffled.

    With free=True every K is trivial, so every point has trivial stabilizer. Only K with
    |G/K| <= max_points are used; a free action still needs |G| points, which is the one
    case where max_points is exceeded.
    """
    subgroups = [group.trivial] if free else list(group.subgroups)
    target = int(rng.integers(1, max(max_points, 1) + 1))
    fitting = [K for K in subgroups if group.order // len(K) <= target] or subgroups
    blocks, size = [], 0
    while True:
        K = fitting[int(rng.integers(len(fitting)))]
        n = group.order // len(K)
        if blocks and size + n > target:
            break
        blocks.append(coset_action(group, K))
        size += n
        if size >= target:
            break

    perm = [[] for _ in group.elements]
    offset = 0
    for block in blocks:
        for g, p in enumerate(block):
            perm[g].extend(offset + y for y in p)
        offset += len(block[0])

    shuffle = rng.permutation(size)
    unshuffle = np.argsort(shuffle)
    perm = [[int(shuffle[p[int(unshuffle[y])]]) for y in range(size)] for p in perm]
    logger.debug('random global action: %d orbits on %d points', len(blocks), size)
    return GlobalAction(group, size, perm)


def random_subset(rng: np.random.Generator, m: int) -> list[int]:
    """A random nonempty subset of 0..m-1"""
    mask = rng.random(m) < rng.uniform(0.2, 0.9)
    if not mask.any():
        mask[int(rng.integers(m))] = True
    return [int(y) for y in np.flatnonzero(mask)]


def random_partial_action(group: FiniteGroup, rng: np.random.Generator, max_points: int = 16,
                          free: bool = False) -> PartialAction:
    """Restriction of a random global action to at most max_points of its points"""
    u = random_global_action(group, rng, max_points=max_points, free=free)
    subset = random_subset(rng, u.space_size)
    if len(subset) > max_points:
        subset = rng.choice(subset, size=max(max_points, 1), replace=False)
    return induce_from_global(u, subset)


def mutate(pa: PartialAction, rng: np.random.Generator) -> PartialAction:
    """Change a single graph entry: add, drop or redirect one pair (identity graph included)"""
    graphs = [list(graph) for graph in pa.graphs]
    g = int(rng.integers(pa.group.order))
    m = pa.space_size
    mode = rng.choice(['add', 'drop', 'redirect']) if graphs[g] else 'add'
    if mode == 'add':
        graphs[g].append((int(rng.integers(m)), int(rng.integers(m))))
    else:
        i = int(rng.integers(len(graphs[g])))
        x, y = graphs[g].pop(i)
        if mode == 'redirect':
            graphs[g].append((x, int(rng.integers(m))))
    return PartialAction(pa.group, m, graphs, pa.labels)
