import pytest
from hypothesis import given, settings

from conftest import partial_actions
from paract.cli.fixtures import regular_action
from paract.core import GlobalAction, cyclic, klein4, quaternion8, symmetric3
from paract.errors import BadParams, DomainError, GroupMismatch, InvalidChain, NotFree
from paract.orbits import Section, orbit_quotient, section_finite, verify_section
from paract.tower import (
    NormalChain, build_chain, build_tower, compatibility_check, inverse_limit, inverse_limit_check,
    parse_chain, tower_descent, tower_section,
)


def test_build_chain():
    assert build_chain(cyclic(4)).to_list() == [[0, 1, 2, 3], [0, 2], [0]]
    assert build_chain(symmetric3()).to_list() == [[0, 1, 2, 3, 4, 5], [0, 3, 4], [0]]
    assert build_chain(klein4()).to_list() == [[0, 1, 2, 3], [0, 1], [0]]
    assert len(build_chain(quaternion8())) == 4
    assert build_chain(cyclic(1)).to_list() == [[0]]

def test_parse_chain():
    chain = parse_chain('0,1,2,3;0,2;0', cyclic(4))
    assert chain == build_chain(cyclic(4))
    assert parse_chain('0,1,2,3;0', cyclic(4)).to_list() == [[0, 1, 2, 3], [0]]
    with pytest.raises(BadParams):
        parse_chain('0,a;0', cyclic(4))

@pytest.mark.parametrize('text', ['0,2;0', '0,1,2,3;0,2', '0,1,2,3;0,2;0,2;0', '0,1,2,3;0,1;0'])
def test_invalid_chains(text):
    with pytest.raises(InvalidChain):
        parse_chain(text, cyclic(4))

def test_invalid_chain_not_normal():
    with pytest.raises(InvalidChain):
        NormalChain(symmetric3(), (frozenset(range(6)), frozenset({0, 1}), frozenset({0})))

def test_tower_f3(f3):
    tq = build_tower(f3)
    assert [len(level) for level in tq.levels] == [1, 1, 2]
    assert inverse_limit(tq) == [(0, 0, 0), (0, 0, 1)]
    assert inverse_limit_check(tq)
    assert tq.compose(2, 0) == (0, 0)

def test_tower_section_f3(f3):
    s = tower_section(f3, parse_chain('0,1,2,3;0,2;0', f3.group))
    assert verify_section(f3, s)
    assert s.points() in ((0,), (1,))
    assert [f3.label(x) for x in s.points()][0] in (0, 2)

def test_tower_descent_steps_are_ordered(f3):
    steps = tower_descent(f3)
    assert [sorted(N) for N, _ in steps] == [[0, 1, 2, 3], [0, 2], [0]]
    for (N, r), (M, r_next) in zip(steps, steps[1:]):
        assert compatibility_check(f3, N, r, M, r_next)

def test_compatibility_check_needs_matching_subgroups(f3):
    coarse = orbit_quotient(f3)
    r = Section.from_points(coarse, orbit_quotient(f3, {0}), [0])
    assert not compatibility_check(f3, {0, 2}, r, {0}, r)

def test_compatibility_check_rejects_disagreeing_sections():
    pa = regular_action(cyclic(4)).as_partial()
    G, N, M = orbit_quotient(pa), orbit_quotient(pa, {0, 2}), orbit_quotient(pa, {0})
    r = Section.from_points(G, N, [0])
    r_prime = Section.from_points(G, M, [1])
    assert verify_section(pa, r) and verify_section(pa, r_prime)
    # r chooses the class {0, 2}, r_prime projects onto {1, 3}
    assert not compatibility_check(pa, {0, 2}, r, {0}, r_prime)
    assert compatibility_check(pa, {0, 2}, r, {0}, Section.from_points(G, M, [2]))

def test_tower_section_matches_section_finite():
    pa = GlobalAction(cyclic(2), 4, [[0, 1, 2, 3], [1, 0, 3, 2]]).as_partial()
    tower = tower_section(pa, parse_chain('0,1;0', pa.group))
    finite = section_finite(pa)
    assert verify_section(pa, tower) and verify_section(pa, finite)
    full = orbit_quotient(pa)
    assert len(full) == len(tower.choice) == len(finite.choice) == 2
    assert [full.class_of[x] for x in tower.points()] == [full.class_of[x] for x in finite.points()] == [0, 1]

@pytest.mark.parametrize('group', [cyclic(4), klein4(), quaternion8(), symmetric3()])
def test_last_descent_step_dominates_all(group):
    pa = regular_action(group).as_partial()
    steps = tower_descent(pa)
    for i, (N, r) in enumerate(steps):
        for M, r_later in steps[i:]:
            assert compatibility_check(pa, N, r, M, r_later)
    final_N, final_r = steps[-1]
    assert final_N == group.trivial
    assert verify_section(pa, final_r)

def test_invalid_free_action_is_a_domain_error(swapped_z3):
    with pytest.raises(DomainError):
        tower_section(swapped_z3)

def test_tower_needs_free(f2):
    with pytest.raises(NotFree):
        tower_section(f2)

def test_chain_of_another_group(f3):
    with pytest.raises(GroupMismatch):
        tower_descent(f3, build_chain(cyclic(2)))
    with pytest.raises(GroupMismatch):
        build_tower(f3, build_chain(symmetric3()))


"""Properties"""
@settings(max_examples=30, deadline=None)
@given(partial_actions(free=True))
def test_tower_section_of_free_actions(pa):
    assert verify_section(pa, tower_section(pa))
    steps = tower_descent(pa)
    for (N, r), (M, r_next) in zip(steps, steps[1:]):
        assert compatibility_check(pa, N, r, M, r_next)
    for N, r in steps:
        assert compatibility_check(pa, N, r, *steps[-1])

@settings(max_examples=30, deadline=None)
@given(partial_actions(free=True))
def test_tower_and_finite_sections_agree(pa):
    tower, finite = tower_section(pa), section_finite(pa)
    assert verify_section(pa, tower) and verify_section(pa, finite)
    full = orbit_quotient(pa)
    assert len(tower.choice) == len(finite.choice) == len(full)
    assert sorted(full.class_of[x] for x in tower.points()) == list(range(len(full)))

@settings(max_examples=30, deadline=None)
@given(partial_actions())
def test_inverse_limit(pa):
    assert inverse_limit_check(build_tower(pa))
