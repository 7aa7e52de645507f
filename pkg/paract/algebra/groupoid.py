"""The action groupoid of a partial action.

Arrows are the pairs (g, x) of G*X, going from x to g.x. The product
(g, x)*(h, y) = (gh, y) is defined when x = h.y, and (g, x)^-1 = (g^-1, g.x).
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from paract.core.actions import PartialAction, Undefined, is_free
from paract.core.union_find import UnionFind
from paract.orbits.quotient import orbit_quotient

logger = logging.getLogger(__name__)

Arrow = tuple[int, int]


@dataclass(frozen=True)
class ActionGroupoid:
    action: PartialAction
    arrows: tuple[Arrow, ...]

    def __len__(self):
        return len(self.arrows)

    @cached_property
    def index(self) -> dict[Arrow, int]:
        return {f: i for i, f in enumerate(self.arrows)}

    def source(self, f: Arrow) -> int:
        return f[1]

    def target(self, f: Arrow) -> int:
        g, x = f
        return self.action.maps[g][x]

    @property
    def units(self) -> tuple[Arrow, ...]:
        return tuple((0, x) for x in self.action.points)

    def is_unit(self, f: Arrow) -> bool:
        return f[0] == 0

    def compose(self, f: Arrow, h: Arrow):
        return groupoid_compose(self, f, h)

    def inverse(self, f: Arrow) -> Arrow:
        g, _ = f
        return self.action.group.inv(g), self.target(f)

    def isotropy(self, x: int) -> frozenset[int]:
        """Group elements g with (g, x) an arrow from x to x"""
        return frozenset(g for g, y in self.arrows if y == x and self.target((g, y)) == x)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        uf = UnionFind(self.action.space_size)
        for f in self.arrows:
            uf.union(self.source(f), self.target(f))
        return tuple(uf.classes())

    def composition_table(self) -> dict[tuple[int, int], int]:
        """(i, j) -> k for every composable pair arrows[i] * arrows[j] = arrows[k]"""
        table = {}
        for j, h in enumerate(self.arrows):
            for i, f in enumerate(self.arrows):
                fh = groupoid_compose(self, f, h)
                if fh is not Undefined and fh in self.index:
                    table[i, j] = self.index[fh]
        return table

    def to_dict(self) -> dict:
        pa = self.action
        arrow = lambda f: [f[0], pa.label(f[1])]
        return {
            'arrows': [{'arrow': arrow(f), 'source': pa.label(self.source(f)),
                        'target': pa.label(self.target(f))} for f in self.arrows],
            'compositions': [[i, j, k] for (i, j), k in sorted(self.composition_table().items())],
            'components': [[pa.label(x) for x in c] for c in self.components],
        }


def groupoid_build(pa: PartialAction) -> ActionGroupoid:
    gpd = ActionGroupoid(pa, tuple(sorted(pa.domain)))
    logger.debug('action groupoid with %d arrows over %d points', len(gpd), pa.space_size)
    return gpd


def groupoid_compose(gpd: ActionGroupoid, f: Arrow, h: Arrow):
    """f*h, or Undefined unless the source of f is the target of h"""
    if gpd.source(f) != gpd.target(h):
        return Undefined
    return gpd.action.group.op(f[0], h[0]), h[1]


@dataclass
class GroupoidReport:
    arrows: int
    components: int
    orbits: int
    trivial_isotropy: bool
    failures: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return {
            'arrows': self.arrows,
            'components': self.components,
            'orbits': self.orbits,
            'trivial_isotropy': self.trivial_isotropy,
            'ok': self.ok,
            'failures': {k: [list(map(list, t)) for t in v[:10]] for k, v in self.failures.items()},
        }


def trivial_isotropy(gpd: ActionGroupoid) -> bool:
    return all(gpd.isotropy(x) <= {0} for x in gpd.action.points)


def groupoid_verify(gpd: ActionGroupoid) -> GroupoidReport:
    arrows = gpd.arrows
    arrow_set = set(arrows)
    failures = {k: [] for k in ('closure', 'endpoints', 'involution', 'inverse_units',
                                'associativity', 'components')}

    composable = {}
    for f in arrows:
        for h in arrows:
            fh = groupoid_compose(gpd, f, h)
            if fh is Undefined:
                continue
            if fh not in arrow_set:
                failures['closure'].append((f, h))
                continue
            composable[f, h] = fh
            if gpd.source(fh) != gpd.source(h) or gpd.target(fh) != gpd.target(f):
                failures['endpoints'].append((f, h))

    for f in arrows:
        f_inv = gpd.inverse(f)
        if f_inv not in arrow_set or gpd.inverse(f_inv) != f:
            failures['involution'].append((f,))
            continue
        if composable.get((f, f_inv)) != (0, gpd.target(f)) or composable.get((f_inv, f)) != (0, gpd.source(f)):
            failures['inverse_units'].append((f,))

    ending_at = {}
    for h in arrows:
        ending_at.setdefault(gpd.target(h), []).append(h)
    for (f, g), fg in composable.items():
        for h in ending_at.get(gpd.source(g), ()):
            gh = composable.get((g, h))
            if gh is None:
                continue
            if composable.get((fg, h)) != composable.get((f, gh)):
                failures['associativity'].append((f, g, h))

    orbits = orbit_quotient(gpd.action).classes
    if set(gpd.components) != set(orbits):
        failures['components'].append(tuple(gpd.components))

    report = GroupoidReport(len(arrows), len(gpd.components), len(orbits), trivial_isotropy(gpd), failures)
    if report.trivial_isotropy != is_free(gpd.action):
        logger.warning('isotropy and freeness disagree')
    return report


def to_dot(gpd: ActionGroupoid) -> str:
    """Graphviz digraph of the non-unit arrows"""
    pa = gpd.action
    lines = ['digraph groupoid {']
    for x in pa.points:
        lines.append(f'  {x} [label="{pa.label(x)}"];')
    for f in arrows_without_units(gpd):
        lines.append(f'  {gpd.source(f)} -> {gpd.target(f)} [label="{f[0]}"];')
    lines.append('}')
    return '\n'.join(lines)


def arrows_without_units(gpd: ActionGroupoid) -> list[Arrow]:
    return [f for f in gpd.arrows if not gpd.is_unit(f)]
