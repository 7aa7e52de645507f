"""The enveloping space X_G = (G x X)/R with its global action mu and the embedding iota.

(g, x) R (h, y)  iff  x lies in the domain of eta_{h^-1 g} and eta_{h^-1 g}(x) = y.

The pair (g, x) is encoded as g*m + x, so sorting codes sorts pairs lexicographically.
Every class is labelled by its least pair.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

from paract.core.actions import GlobalAction, PartialAction, induce_from_global, validate_global_action
from paract.errors import InvalidPartialAction, RNotEquivalence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnvelopingSpace:
    source: PartialAction
    classes: tuple[tuple[int, ...], ...]   # pair codes, sorted; classes ordered by least code
    class_of: tuple[int, ...]              # pair code -> class
    mu: GlobalAction
    iota: tuple[int, ...]

    def __len__(self):
        return len(self.classes)

    def pair(self, code: int) -> tuple[int, int]:
        return divmod(code, self.source.space_size)

    def code(self, g: int, x: int) -> int:
        return g * self.source.space_size + x

    def class_of_pair(self, g: int, x: int) -> int:
        return self.class_of[self.code(g, x)]

    def least_pair(self, c: int) -> tuple[int, int]:
        return self.pair(self.classes[c][0])

    @cached_property
    def iota_inverse(self) -> dict[int, int]:
        return {c: x for x, c in enumerate(self.iota)}

    def as_partial(self) -> PartialAction:
        return self.mu.as_partial()

    def to_dict(self) -> dict:
        pa = self.source
        label = lambda code: [self.pair(code)[0], pa.label(self.pair(code)[1])]
        return {
            'classes': [[label(code) for code in c] for c in self.classes],
            'mu': {str(g): list(p) for g, p in enumerate(self.mu.perm)},
            'iota': list(self.iota),
        }


def related(pa: PartialAction, g: int, x: int) -> frozenset[tuple[int, int]]:
    """All (h, y) with (g, x) R (h, y)"""
    G = pa.group
    out = set()
    for h in G.elements:
        k = G.op(G.inv(h), g)
        if x in pa.maps[k]:
            out.add((h, pa.maps[k][x]))
    return frozenset(out)


def envelope(pa: PartialAction) -> EnvelopingSpace:
    """Quotient G x X by R, with mu_g[h, x] = [gh, x] and iota(x) = [1, x].

    R is checked to be an equivalence relation; RNotEquivalence means pa is not a
    partial action.
    """
    G, m = pa.group, pa.space_size
    n = G.order * m
    neighbours = []
    for code in range(n):
        g, x = divmod(code, m)
        neighbours.append(frozenset(h*m + y for h, y in related(pa, g, x)))

    for code, block in enumerate(neighbours):
        if code not in block:
            raise RNotEquivalence(f'R is not reflexive at {divmod(code, m)}')
        for other in block:
            if neighbours[other] != block:
                raise RNotEquivalence(f'R is not symmetric or transitive at {divmod(code, m)}')

    classes = sorted({tuple(sorted(block)) for block in neighbours}, key=lambda c: c[0])
    class_of = [0] * n
    for i, c in enumerate(classes):
        for code in c:
            class_of[code] = i

    perm = []
    for g in G.elements:
        p = []
        for c in classes:
            targets = {class_of[G.op(g, h)*m + x] for h, x in (divmod(code, m) for code in c)}
            if len(targets) != 1:
                raise RNotEquivalence(f'mu_{g} is not well defined on R-classes')
            p.append(targets.pop())
        perm.append(p)

    labels = [divmod(c[0], m) for c in classes]
    mu = GlobalAction(G, len(classes), perm, [(g, pa.label(x)) for g, x in labels])
    iota = tuple(class_of[x] for x in range(m))  # [1, x] has code 0*m + x
    logger.debug('enveloping space: %d classes from %d pairs', len(classes), n)
    return EnvelopingSpace(pa, tuple(classes), tuple(class_of), mu, iota)


def restriction_to_iota(env: EnvelopingSpace) -> PartialAction:
    """The partial action induced by mu on iota(X), pulled back to X along iota"""
    induced = induce_from_global(env.mu, env.iota)
    image = sorted(set(env.iota))
    back = [env.iota_inverse[c] for c in image]
    graphs = [[(back[a], back[b]) for a, b in graph] for graph in induced.graphs]
    return PartialAction(env.source.group, env.source.space_size, graphs, env.source.labels)


def check_envelope(env: EnvelopingSpace) -> list[str]:
    """Failed properties of the enveloping space (empty when all hold)"""
    failures = []
    try:
        validate_global_action(env.mu)
    except InvalidPartialAction as e:
        failures.append(f'mu is not a global action: {e}')
    if len(set(env.iota)) != len(env.iota):
        failures.append('iota is not injective')
    reached = {env.mu.perm[g][c] for g in env.mu.group.elements for c in env.iota}
    if reached != set(range(len(env))):
        failures.append('G.iota(X) is not all of X_G')
    if restriction_to_iota(env).graphs != env.source.graphs:
        failures.append('mu restricted to iota(X) differs from eta')
    return failures


def to_dot(env: EnvelopingSpace) -> str:
    """Graphviz digraph of mu: one edge c -> mu_g(c) for every g != 1"""
    lines = ['digraph mu {']
    for c in range(len(env)):
        g, x = env.least_pair(c)
        shape = 'box' if c in env.iota_inverse else 'ellipse'
        lines.append(f'  {c} [label="[{g},{env.source.label(x)}]", shape={shape}];')
    for g in range(1, env.mu.group.order):
        for c, d in enumerate(env.mu.perm[g]):
            lines.append(f'  {c} -> {d} [label="{g}"];')
    lines.append('}')
    return '\n'.join(lines)
