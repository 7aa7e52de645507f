import pytest
from hypothesis import strategies as st

import numpy as np

from paract.cli.fixtures import bernoulli, subgroup_restriction
from paract.core import PartialAction, cyclic, named_group
from paract.core.generate import random_partial_action

SMALL_GROUPS = ('trivial', 'Z2', 'Z3', 'Z4', 'V4', 'S3', 'Z6', 'D4')


@pytest.fixture
def z2():
    return cyclic(2)

@pytest.fixture
def z4():
    return cyclic(4)


@pytest.fixture
def f1(z2):
    """Z/2 on {0, 1} with X_a empty"""
    return PartialAction(z2, 2, [[(0, 0), (1, 1)], []])

@pytest.fixture
def f2():
    """Partial Bernoulli action of Z/2; points (1,0) and (1,1)"""
    return bernoulli(cyclic(2))

@pytest.fixture
def f3(z4):
    """Z/4 acting on itself, restricted to U = {0, 2}"""
    return subgroup_restriction(z4, [0, 2])


@pytest.fixture
def swapped_z3():
    """Free on 3 points but not a partial action: eta_1 eta_1 is the identity on {0, 1}, eta_2 is not"""
    swap = [(0, 1), (1, 0)]
    return PartialAction(cyclic(3), 3, [[(0, 0), (1, 1), (2, 2)], swap, swap])


@st.composite
def partial_actions(draw, free=None, groups=SMALL_GROUPS, max_points=10):
    name = draw(st.sampled_from(groups))
    seed = draw(st.integers(0, 2**32 - 1))
    is_free = draw(st.booleans()) if free is None else free
    rng = np.random.default_rng(seed)
    return random_partial_action(named_group(name), rng, max_points=max_points, free=is_free)
