import pytest
from hypothesis import given, settings

from conftest import partial_actions
from paract.core import PartialAction, cyclic, is_free, is_invariant
from paract.errors import NotASubgroup, NotFree, NotNested
from paract.orbits import (
    NotSeparable, Section, clopen_cover, connect, connecting_map, disjoint_refinement,
    identity_section, invariant_separator, orbit, orbit_quotient, section_finite, verify_section,
)


def test_orbit_quotient_f2(f2):
    q = orbit_quotient(f2)
    assert q.classes == ((0,), (1,))
    assert q.to_dict()['classes'] == [[(1, 0)], [(1, 1)]]

def test_orbit_quotient_f3(f3):
    q = orbit_quotient(f3)
    assert q.classes == ((0, 1),)
    assert q.representative(0) == 0
    assert [f3.label(x) for x in q.classes[0]] == [0, 2]

def test_trivial_subgroup_gives_singletons(f3):
    q = orbit_quotient(f3, {0})
    assert q.classes == ((0,), (1,))

def test_orbit_quotient_rejects_non_subgroup(f3):
    with pytest.raises(NotASubgroup):
        orbit_quotient(f3, {0, 1})

def test_orbit_of_point(f3):
    assert orbit(f3, 0) == {0, 1}
    assert orbit(f3, 0, {0}) == {0}

def test_connecting_map(f2, f3):
    assert connecting_map(f3, {0, 2}, {0, 1, 2, 3}) == (0,)
    assert connecting_map(f3, {0, 2}, {0, 2}) == (0,)
    assert connecting_map(f2, {0}, {0, 1}) == orbit_quotient(f2).class_of
    with pytest.raises(NotNested):
        connecting_map(f3, {0, 1, 2, 3}, {0, 2})

def test_connect_needs_same_action(f2, f3):
    with pytest.raises(NotNested):
        connect(orbit_quotient(f2), orbit_quotient(f3))

def test_invariant_separator(f2, f3):
    x, y = f2.point((1, 0)), f2.point((1, 1))
    assert invariant_separator(f2, x, y) == {x}
    assert invariant_separator(f3, 0, 1) is NotSeparable
    assert invariant_separator(f3, 0, 0) is NotSeparable

def test_section_finite_f3(f3):
    s = section_finite(f3)
    assert verify_section(f3, s)
    assert s.points() in ((0,), (1,))
    assert s.to_dict()['chosen'] in ([[0]], [[2]])

def test_section_finite_f2(f2):
    with pytest.raises(NotFree):
        section_finite(f2)

def test_section_finite_trivial_group():
    pa = PartialAction(cyclic(1), 3, [[(0, 0), (1, 1), (2, 2)]])
    s = section_finite(pa)
    assert s.points() == (0, 1, 2)
    assert s.choice == (0, 1, 2)

def test_verify_section(f3):
    coarse, fine = orbit_quotient(f3), orbit_quotient(f3, {0})
    assert verify_section(f3, Section.from_points(coarse, fine, [0]))
    assert not verify_section(f3, Section(coarse, fine, (2,)))
    assert not verify_section(f3, Section(coarse, fine, ()))
    assert verify_section(f3, identity_section(coarse))

def test_clopen_cover_and_refinement(f3):
    q = orbit_quotient(f3)
    cover = clopen_cover(f3, q)
    assert [image for image, _ in cover] == [{0}, {0}]
    assert disjoint_refinement([image for image, _ in cover]) == [(0, frozenset({0}))]
    assert disjoint_refinement([frozenset({0, 1}), frozenset({1, 2}), frozenset({0})]) == [
        (0, frozenset({0, 1})), (1, frozenset({2})),
    ]


"""Properties"""
@settings(max_examples=40, deadline=None)
@given(partial_actions())
def test_one_step_orbits_match_reachability(pa):
    q = orbit_quotient(pa)
    for x in pa.points:
        reached, frontier = {x}, [x]
        while frontier:
            y = frontier.pop()
            for m in pa.maps:
                if y in m and m[y] not in reached:
                    reached.add(m[y])
                    frontier.append(m[y])
        assert set(q.classes[q.class_of[x]]) == reached

@settings(max_examples=30, deadline=None)
@given(partial_actions())
def test_separators(pa):
    q = orbit_quotient(pa)
    for x in pa.points:
        for y in pa.points:
            A = invariant_separator(pa, x, y)
            if q.class_of[x] == q.class_of[y]:
                assert A is NotSeparable
                continue
            assert x in A and y not in A
            assert is_invariant(pa, A) and is_invariant(pa, set(pa.points) - A)
            assert q.preimage(q.project(A)) == A

@settings(max_examples=40, deadline=None)
@given(partial_actions())
def test_section_finite_iff_free(pa):
    if is_free(pa):
        assert verify_section(pa, section_finite(pa))
    else:
        with pytest.raises(NotFree):
            section_finite(pa)

@settings(max_examples=30, deadline=None)
@given(partial_actions(free=True))
def test_free_orbit_sizes(pa):
    for x in pa.points:
        assert len(orbit(pa, x)) == len(pa.defined_at(x))
