"""Partial action of G/H on the orbit space X/~H, for a free partial action and a normal H.

G/H acts globally on X_G/~H by tau_{gH}(H[t, x]) = H[gt, x]. The embedding
phi: X/~H -> X_G/~H, H^x.x -> H[1, x], identifies X/~H with part of that space; restricting
tau to the image of phi and pulling back along phi gives eta_{G/H}. Its orbit space is
identified with X/~G by psi.
"""
import logging
from dataclasses import dataclass
from typing import Iterable

from paract.core.actions import GlobalAction, PartialAction, induce_from_global, is_free
from paract.core.groups import FiniteGroup, Subgroup
from paract.core.union_find import UnionFind
from paract.errors import InvalidPartialAction, NotFree
from paract.globalization.envelope import EnvelopingSpace, envelope
from paract.orbits.quotient import OrbitQuotient, orbit_quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientGroupAction:
    base: PartialAction
    subgroup: Subgroup
    quotient: FiniteGroup                 # G/H, cosets indexed by their least element
    coset_of: tuple[int, ...]
    envelope: EnvelopingSpace
    envelope_classes: tuple[tuple[int, ...], ...]   # X_G/~H, as sets of X_G classes
    tau: GlobalAction                     # G/H on X_G/~H
    phi: tuple[int, ...]                  # X/~H -> X_G/~H
    action: PartialAction                 # eta_{G/H} on T = X/~H
    base_quotient: OrbitQuotient          # X/~H, the points of T
    orbit_space: OrbitQuotient            # T/~{G/H}
    full_quotient: OrbitQuotient          # X/~G
    psi: tuple[int, ...]                  # T/~{G/H} -> X/~G

    @property
    def psi_inverse(self) -> tuple[int, ...]:
        inverse = [0] * len(self.psi)
        for w, z in enumerate(self.psi):
            inverse[z] = w
        return tuple(inverse)

    def to_dict(self) -> dict:
        return {
            'subgroup': sorted(self.subgroup),
            'quotient_order': self.quotient.order,
            'cosets': [[g for g in self.base.group.elements if self.coset_of[g] == i]
                       for i in range(self.quotient.order)],
            'phi': list(self.phi),
            'graphs': {str(q): [list(p) for p in graph] for q, graph in enumerate(self.action.graphs)},
            'psi': list(self.psi),
        }


def subgroup_orbits(u: GlobalAction, H: Iterable[int]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Orbits of a global action restricted to H, with the point -> orbit index map"""
    uf = UnionFind(u.space_size)
    for h in H:
        for y, z in enumerate(u.perm[h]):
            uf.union(y, z)
    classes = uf.classes()
    class_of = [0] * u.space_size
    for i, c in enumerate(classes):
        for y in c:
            class_of[y] = i
    return tuple(classes), tuple(class_of)


def quotient_group_action(pa: PartialAction, H: Iterable[int]) -> QuotientGroupAction:
    G = pa.group
    H = G.ensure_normal(H)
    if not is_free(pa):
        raise NotFree('quotient group actions are built for free partial actions only')
    Q, coset_of, cosets = G.quotient(H)
    reps = [min(c) for c in cosets]

    env = envelope(pa)
    env_classes, env_class_of = subgroup_orbits(env.mu, H)

    perm = []
    for q, g in enumerate(reps):
        p = []
        for c in env_classes:
            targets = {env_class_of[env.mu.perm[k][d]] for k in cosets[q] for d in c}
            if len(targets) != 1:
                raise InvalidPartialAction('tau is not well defined')
            p.append(targets.pop())
        perm.append(p)
    tau = GlobalAction(Q, len(env_classes), perm)

    base_q = orbit_quotient(pa, H)
    phi = []
    for c in base_q.classes:
        targets = {env_class_of[env.iota[x]] for x in c}
        if len(targets) != 1:
            raise InvalidPartialAction('phi is not well defined')
        phi.append(targets.pop())
    if len(set(phi)) != len(phi):
        raise InvalidPartialAction('phi is not injective')

    # restrict tau to Im(phi), then carry the points back to X/~H
    restricted = induce_from_global(tau, phi)
    image = sorted(set(phi))
    back = {c: k for k, c in enumerate(phi)}
    graphs = [[(back[image[a]], back[image[b]]) for a, b in graph] for graph in restricted.graphs]
    labels = [pa.label(base_q.representative(k)) for k in range(len(base_q))]
    action = PartialAction(Q, len(base_q), graphs, labels)

    orbit_space = orbit_quotient(action)
    full = orbit_quotient(pa)
    psi = [None] * len(orbit_space)
    for x in pa.points:
        w = orbit_space.class_of[base_q.class_of[x]]
        z = full.class_of[x]
        if psi[w] not in (None, z):
            raise InvalidPartialAction('psi is not well defined')
        psi[w] = z
    if sorted(psi) != list(range(len(full))):
        raise InvalidPartialAction('psi is not a bijection')

    logger.debug('G/H of order %d acting on %d H-orbits', Q.order, len(base_q))
    return QuotientGroupAction(
        base=pa, subgroup=H, quotient=Q, coset_of=coset_of, envelope=env,
        envelope_classes=env_classes, tau=tau, phi=tuple(phi), action=action,
        base_quotient=base_q, orbit_space=orbit_space, full_quotient=full, psi=tuple(psi),
    )


def check_homeo(qa: QuotientGroupAction) -> bool:
    """psi(pi_{G/H}(pi_H(x))) = pi_G(x) for every x"""
    return all(
        qa.psi[qa.orbit_space.class_of[qa.base_quotient.class_of[x]]] == qa.full_quotient.class_of[x]
        for x in qa.base.points
    )
