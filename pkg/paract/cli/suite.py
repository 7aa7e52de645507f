"""Property suite over random instances.

Each instance is built from its own seed, so a run is reproducible and instances can be
checked in separate worker processes. A check returns the list of its failures.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from paract.algebra.birget_rhodes import br_count, br_enumerate, br_verify_inverse_monoid
from paract.algebra.groupoid import groupoid_build, groupoid_verify
from paract.config import settings
from paract.core.actions import PartialAction, hat_action, is_free, is_invariant, saturate
from paract.core.axioms import validate_partial_action
from paract.core.generate import mutate, random_partial_action
from paract.core.groups import named_group
from paract.errors import NotFree
from paract.globalization.envelope import check_envelope, envelope
from paract.globalization.quotient_group import check_homeo, quotient_group_action
from paract.globalization.transfer import (
    canonical_splitting, section_from_envelope, section_from_two, section_to_envelope,
)
from paract.orbits.quotient import NotSeparable, invariant_separator, orbit_quotient
from paract.orbits.sections import section_finite, verify_section
from paract.tower.descent import compatibility_check, tower_descent, tower_section

logger = logging.getLogger(__name__)

GROUPS = ('trivial', 'Z2', 'Z3', 'Z4', 'V4', 'Z5', 'S3', 'Z6', 'D4', 'Q8')
BR_GROUPS = ('trivial', 'Z2', 'Z3', 'Z4', 'V4', 'Z5', 'S3', 'Z6')


"""Checks"""
def check_axioms(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    failures = []
    report = validate_partial_action(pa)
    if not report.valid:
        failures.append(f'induced action rejected: {report.clauses()}')
    for _ in range(3):
        mutated = validate_partial_action(mutate(pa, rng))
        if not mutated.consistent:
            failures.append(f'axiomatizations disagree on a mutation: {mutated.clauses()}')
    return failures


def check_saturation(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    U = {int(x) for x in np.flatnonzero(rng.random(pa.space_size) < 0.5)}
    S = saturate(pa, U)
    failures = []
    if not is_invariant(pa, S):
        failures.append(f'saturation of {sorted(U)} is not invariant')
    if not is_invariant(pa, set(pa.points) - S):
        failures.append(f'complement of the saturation of {sorted(U)} is not invariant')
    if saturate(pa, S) != S:
        failures.append('saturation is not idempotent')
    return failures


def check_globalization(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    env = envelope(pa)
    failures = check_envelope(env)
    if orbit_quotient(hat_action(pa)).classes != env.classes:
        failures.append('envelope classes differ from the hat orbits')
    return failures


def check_separation(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    q = orbit_quotient(pa)
    failures = []
    for x in pa.points:
        for y in pa.points:
            if q.class_of[x] == q.class_of[y]:
                continue
            A = invariant_separator(pa, x, y)
            if A is NotSeparable:
                failures.append(f'{x} and {y} were not separated')
            elif not (x in A and y not in A and is_invariant(pa, A)
                      and is_invariant(pa, set(pa.points) - A)):
                failures.append(f'bad separator {sorted(A)} for {x}, {y}')
            elif q.preimage(q.project(A)) != A:
                failures.append(f'separator {sorted(A)} for {x}, {y} is not a union of orbits')
    return failures


def check_sections(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    try:
        s = section_finite(pa)
    except NotFree:
        return [] if not is_free(pa) else ['section_finite refused a free action']
    if not is_free(pa):
        return ['section_finite accepted a non-free action']
    return [] if verify_section(pa, s) else ['section_finite output is not a section']


def check_quotient_groups(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    if not is_free(pa):
        return []
    failures = []
    for H in pa.group.normal_subgroups:
        qa = quotient_group_action(pa, H)
        if not is_free(qa.action):
            failures.append(f'quotient by {sorted(H)} is not free')
        if sorted(qa.psi) != list(range(len(qa.full_quotient))):
            failures.append(f'psi is not a bijection for {sorted(H)}')
        if not check_homeo(qa):
            failures.append(f'psi does not commute with the orbit maps for {sorted(H)}')
    return failures


def check_descent(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    if not is_free(pa):
        return []
    steps = tower_descent(pa)
    failures = []
    for (N, r), (M, r_next) in zip(steps, steps[1:]):
        if not compatibility_check(pa, N, r, M, r_next):
            failures.append(f'descent step {sorted(N)} -> {sorted(M)} is not compatible')
    if not verify_section(pa, tower_section(pa)):
        failures.append('tower section is not a section')
    return failures


def check_transfers(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    if not is_free(pa):
        return []
    q = section_finite(pa)
    s = section_to_envelope(pa, q)
    r = section_from_envelope(pa, s)
    p = section_from_two(pa, s, canonical_splitting(envelope(pa)))
    P = envelope(pa).as_partial()
    failures = []
    if not verify_section(P, s):
        failures.append('section_to_envelope output is not a section')
    if not verify_section(pa, r):
        failures.append('section_from_envelope output is not a section')
    if not verify_section(pa, p):
        failures.append('section_from_two output is not a section')
    return failures


def check_groupoid(pa: PartialAction, rng: np.random.Generator) -> list[str]:
    report = groupoid_verify(groupoid_build(pa))
    failures = [f'{k}: {len(v)} failures' for k, v in report.failures.items() if v]
    if report.components != report.orbits:
        failures.append('component count differs from orbit count')
    if report.trivial_isotropy != is_free(pa):
        failures.append('trivial isotropy and freeness disagree')
    return failures


CHECKS: dict[str, Callable[[PartialAction, np.random.Generator], list[str]]] = {
    'axioms': check_axioms,
    'saturation': check_saturation,
    'globalization': check_globalization,
    'separation': check_separation,
    'sections': check_sections,
    'quotient_groups': check_quotient_groups,
    'descent': check_descent,
    'transfers': check_transfers,
    'groupoid': check_groupoid,
}


"""Instances"""
def instance(seed: int, max_points: int = 16) -> PartialAction:
    rng = np.random.default_rng(seed)
    group = named_group(GROUPS[int(rng.integers(len(GROUPS)))])
    return random_partial_action(group, rng, max_points=max_points, free=bool(rng.random() < 0.5))


def run_instance(seed: int) -> dict[str, list[str]]:
    pa = instance(seed)
    rng = np.random.default_rng([seed, 1])
    return {name: check(pa, rng) for name, check in CHECKS.items()}


def check_birget_rhodes() -> list[str]:
    failures = []
    for name in BR_GROUPS:
        G = named_group(name)
        if len(br_enumerate(G)) != br_count(G.order):
            failures.append(f'{name}: enumeration does not match the count')
        if not br_verify_inverse_monoid(G).ok:
            failures.append(f'{name}: not an inverse monoid')
    return failures


@dataclass
class SuiteReport:
    instances: int
    seed: int
    free: int = 0
    failures: dict[str, list[tuple[int, str]]] = field(default_factory=lambda: {k: [] for k in CHECKS})

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return {
            'instances': self.instances,
            'seed': self.seed,
            'free_instances': self.free,
            'ok': self.ok,
            'failures': {k: [[s, msg] for s, msg in v[:20]] for k, v in self.failures.items()},
            'failure_counts': {k: len(v) for k, v in self.failures.items()},
        }


def run_suite(instances: Optional[int] = None, seed: Optional[int] = None,
              jobs: Optional[int] = None) -> SuiteReport:
    cfg = settings.updated(suite_instances=instances, seed=seed, jobs=jobs)
    instances, seed, jobs = cfg.suite_instances, cfg.seed, cfg.jobs
    seeds = range(seed, seed + instances)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(run_instance, seeds, chunksize=8))
    else:
        results = [run_instance(s) for s in seeds]

    report = SuiteReport(instances, seed)
    report.free = sum(is_free(instance(s)) for s in seeds)
    for s, result in zip(seeds, results):
        for name, failures in result.items():
            report.failures[name].extend((s, msg) for msg in failures)
    report.failures['birget_rhodes'] = [(-1, msg) for msg in check_birget_rhodes()]
    logger.info('suite: %d instances from seed %d, %s', instances, seed, 'ok' if report.ok else 'FAILED')
    return report
