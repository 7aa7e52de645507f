"""Moving sections between orbit maps.

lift_section_through refines a section of pi_{N,G} to one of pi_{M,G} using the free partial
action of N/M on X/~M. The other three transfers go between pi_G: X -> X/~G and the orbit
map Pi_G: X_G -> X_G/~G of the enveloping action.
"""
import logging
from typing import Iterable, Sequence

from paract.core.actions import PartialAction, is_free, restrict_to_subgroup
from paract.errors import ImageNotInIota, NotASection, NotFree, NotNested
from paract.globalization.envelope import EnvelopingSpace, envelope
from paract.globalization.quotient_group import quotient_group_action
from paract.orbits.quotient import orbit_quotient
from paract.orbits.sections import Section, section_finite, verify_section

logger = logging.getLogger(__name__)


def _require_section(pa: PartialAction, s: Section, name: str, pointwise: bool = True):
    if not verify_section(pa, s):
        raise NotASection(f'{name} is not a section over this action')
    if pointwise and (s.to_quotient.subgroup != pa.group.trivial or s.from_quotient.subgroup != pa.group.whole):
        raise NotASection(f'{name} must be a section of the full orbit map')


def lift_section_through(pa: PartialAction, N: Iterable[int], M: Iterable[int], t: Section) -> Section:
    """Given a section t of pi_{N,G}, return alpha = lambda o psi^-1 o t, a section of pi_{M,G}.

    N and M are normal subgroups of G with M inside N; lambda is the finite section of the
    N/M partial action on X/~M and psi identifies its orbit space with X/~N.
    """
    G = pa.group
    N, M = G.ensure_normal(N), G.ensure_normal(M)
    if not M <= N:
        raise NotNested(f'{sorted(M)} is not contained in {sorted(N)}')
    if not is_free(pa):
        raise NotFree('sections are lifted for free partial actions only')
    _require_section(pa, t, 't', pointwise=False)
    if t.from_quotient.subgroup != G.whole or t.to_quotient.subgroup != N:
        raise NotASection('t must be a section of pi_{N,G}')

    elements = sorted(N)
    restricted = restrict_to_subgroup(pa, N)
    qa = quotient_group_action(restricted, [elements.index(m) for m in M])
    lam = section_finite(qa.action)
    psi_inverse = qa.psi_inverse

    choice = tuple(lam.choice[psi_inverse[c]] for c in t.choice)
    alpha = Section(t.from_quotient, orbit_quotient(pa, M), choice)
    if not verify_section(pa, alpha):
        raise NotASection('lifted map is not a section')
    logger.debug('lifted a section from |N|=%d to |M|=%d', len(N), len(M))
    return alpha


def section_to_envelope(pa: PartialAction, q: Section) -> Section:
    """s(G.[1, x]) = iota(q(pi_G(x))), a section of Pi_G"""
    _require_section(pa, q, 'q')
    env = envelope(pa)
    P = env.as_partial()
    coarse = orbit_quotient(P)
    fine = orbit_quotient(P, P.group.trivial)
    points = q.points()

    choice = [None] * len(coarse)
    for x in pa.points:
        w = coarse.class_of[env.iota[x]]
        chosen = env.iota[points[q.from_quotient.class_of[x]]]
        if choice[w] not in (None, chosen):
            raise NotASection('s is not well defined')
        choice[w] = chosen
    return Section.from_points(coarse, fine, choice)


def section_from_envelope(pa: PartialAction, q: Section) -> Section:
    """r(G^x.x) = iota^-1(q(G[1, x])) for a section q of Pi_G with image inside iota(X)"""
    env = envelope(pa)
    P = env.as_partial()
    _require_section(P, q, 'q')
    outside = [c for c in q.points() if c not in env.iota_inverse]
    if outside:
        raise ImageNotInIota(f'classes {outside} of X_G are not in iota(X)')

    full = orbit_quotient(pa)
    chosen = q.points()
    points = [env.iota_inverse[chosen[q.from_quotient.class_of[env.iota[full.representative(z)]]]]
              for z in range(len(full))]
    return Section.from_points(full, orbit_quotient(pa, pa.group.trivial), points)


def canonical_splitting(env: EnvelopingSpace) -> tuple[tuple[int, int], ...]:
    """The least pair (g, x) of every class of X_G"""
    return tuple(env.least_pair(c) for c in range(len(env)))


def section_from_two(pa: PartialAction, q: Section, t: Sequence[tuple[int, int]]) -> Section:
    """p(G^x.x) = second coordinate of t(q(G.[1, x])).

    q is a section of Pi_G and t a splitting of G x X -> X_G, given as one pair per class.
    """
    env = envelope(pa)
    P = env.as_partial()
    _require_section(P, q, 'q')
    G, m = pa.group, pa.space_size
    if len(t) != len(env):
        raise NotASection('t must give one pair for every class of X_G')
    for c, (g, x) in enumerate(t):
        if not (0 <= g < G.order and 0 <= x < m) or env.class_of_pair(g, x) != c:
            raise NotASection(f't sends class {c} to {(g, x)}, which lies outside it')

    full = orbit_quotient(pa)
    chosen = q.points()
    points = []
    for z in range(len(full)):
        w = q.from_quotient.class_of[env.iota[full.representative(z)]]
        points.append(t[chosen[w]][1])
    p = Section.from_points(full, orbit_quotient(pa, pa.group.trivial), points)
    if not verify_section(pa, p):
        raise NotASection('composite is not a section')
    return p
