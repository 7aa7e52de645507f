"""Named instance generators for `paract gen`."""
import logging
from itertools import product
from typing import Any, Callable, Optional

import numpy as np

from paract.config import settings
from paract.core.actions import GlobalAction, PartialAction, induce_from_global
from paract.core.generate import random_partial_action
from paract.core.groups import FiniteGroup, cyclic, named_group
from paract.errors import BadParams, UnknownFixture

logger = logging.getLogger(__name__)


def bernoulli_action(group: FiniteGroup) -> GlobalAction:
    """beta_g(w)(h) = w(g^-1 h) on {0,1}^G.

    A point w is the tuple (w(0), ..., w(n-1)) and points are listed in itertools.product order.
    """
    n = group.order
    if 2**n > settings.max_space_size:
        raise BadParams(f'the Bernoulli space of a group of order {n} has {2**n} points, '
                        f'more than {settings.max_space_size}')
    space = list(product((0, 1), repeat=n))
    index = {w: i for i, w in enumerate(space)}
    perm = []
    for g in group.elements:
        g_inv = group.inv(g)
        perm.append([index[tuple(w[group.op(g_inv, h)] for h in group.elements)] for w in space])
    return GlobalAction(group, len(space), perm, space)


def bernoulli(group: FiniteGroup) -> PartialAction:
    """The partial Bernoulli action: beta restricted to {w : w(1) = 1}"""
    beta = bernoulli_action(group)
    return induce_from_global(beta, [i for i, w in enumerate(beta.labels) if w[0] == 1])


def regular_action(group: FiniteGroup) -> GlobalAction:
    return GlobalAction(group, group.order, [[group.op(g, h) for h in group.elements] for g in group.elements])


def subgroup_restriction(group: FiniteGroup, U) -> PartialAction:
    """Left multiplication restricted to U, so that D_g = U n gU"""
    return induce_from_global(regular_action(group), U)


def trivial(m: int) -> PartialAction:
    if m < 1:
        raise BadParams(f'need at least one point, got {m}')
    return PartialAction(cyclic(1), m, [[(x, x) for x in range(m)]])


def _random(free: bool) -> Callable[..., PartialAction]:
    def gen(group: FiniteGroup, seed: int, max_points: int = 16) -> PartialAction:
        rng = np.random.default_rng(seed)
        return random_partial_action(group, rng, max_points=max_points, free=free)
    return gen


FIXTURES = {
    'bernoulli': ('group',),
    'subgroup-restriction': ('group', 'U'),
    'trivial': ('m',),
    'random-free': ('group', 'seed', 'max_points'),
    'random-any': ('group', 'seed', 'max_points'),
}


def gen_fixture(name: str, params: Optional[dict[str, Any]] = None) -> PartialAction:
    """Build the named fixture.

    params: group (a built-in group name), U (list of group elements), m (number of points),
    seed and max_points. Missing seed falls back to the configured seed.
    """
    if name not in FIXTURES:
        raise UnknownFixture(f'unknown fixture {name!r}; expected one of {", ".join(FIXTURES)}')
    params = {k: v for k, v in (params or {}).items() if v is not None}
    extra = set(params) - set(FIXTURES[name])
    if extra:
        raise BadParams(f'fixture {name} does not take {", ".join(sorted(extra))}')

    group = named_group(params['group']) if 'group' in params else None
    if 'group' in FIXTURES[name] and group is None:
        raise BadParams(f'fixture {name} needs a group')

    if name == 'bernoulli':
        pa = bernoulli(group)
    elif name == 'subgroup-restriction':
        U = params.get('U')
        if not U:
            raise BadParams('subgroup-restriction needs a nonempty U')
        if any(not 0 <= int(u) < group.order for u in U):
            raise BadParams(f'U must lie in 0..{group.order-1}')
        pa = subgroup_restriction(group, U)
    elif name == 'trivial':
        pa = trivial(int(params.get('m', 1)))
    else:
        seed = int(params.get('seed', settings.seed))
        max_points = int(params.get('max_points', 16))
        pa = _random(name == 'random-free')(group, seed, max_points)
    logger.info('generated %s: %r', name, pa)
    return pa
