"""Partial and global actions of a finite group on the points 0..m-1.

A partial action is stored as one graph per group element: graphs[g] lists the pairs (x, y)
with g.x = y. Nothing is assumed about these graphs until validate_partial_action has looked
at them, so malformed actions can still be represented and inspected.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Optional

from paract.core.groups import FiniteGroup
from paract.errors import BadParams, EmptySubset, InvalidPartialAction

logger = logging.getLogger(__name__)

Graph = tuple[tuple[int, int], ...]


class Marker:
    """Named falsy return value, one instance per name"""
    _registry = {}

    def __new__(cls, name: str):
        if name not in cls._registry:
            marker = super().__new__(cls)
            marker.name = name
            cls._registry[name] = marker
        return cls._registry[name]

    def __bool__(self):
        return False

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (Marker, (self.name,))

# g.x for (g, x) outside the domain of the action
Undefined = Marker('Undefined')


def _normalize_graphs(group: FiniteGroup, space_size: int, graphs) -> tuple[Graph, ...]:
    if isinstance(graphs, Mapping):
        graphs = [graphs.get(g, graphs.get(str(g), ())) for g in group.elements]
    graphs = list(graphs)
    if len(graphs) != group.order:
        raise BadParams(f'expected {group.order} graphs, got {len(graphs)}')
    normalized = []
    for g, graph in enumerate(graphs):
        pairs = []
        for pair in graph:
            x, y = (int(v) for v in pair)
            if not (0 <= x < space_size and 0 <= y < space_size):
                raise BadParams(f'graph of {g} has pair {(x, y)} outside 0..{space_size-1}')
            pairs.append((x, y))
        normalized.append(tuple(sorted(set(pairs))))
    return tuple(normalized)

def _normalize_labels(labels, space_size: int) -> Optional[tuple]:
    if labels is None:
        return None
    labels = tuple(_hashable(v) for v in labels)
    if len(labels) != space_size:
        raise BadParams(f'expected {space_size} labels, got {len(labels)}')
    if len(set(labels)) != space_size:
        raise BadParams('point labels must be distinct')
    return labels

def _hashable(v):
    return tuple(_hashable(w) for w in v) if isinstance(v, (list, tuple)) else v


class _Labelled:
    space_size: int
    labels: Optional[tuple]

    @property
    def points(self) -> range:
        return range(self.space_size)

    def label(self, x: int) -> Hashable:
        return x if self.labels is None else self.labels[x]

    def point(self, label: Hashable) -> int:
        """Index of the point carrying this label"""
        if self.labels is None:
            if isinstance(label, int) and 0 <= label < self.space_size:
                return label
            raise KeyError(label)
        return self._label_index[_hashable(label)]

    @cached_property
    def _label_index(self) -> dict:
        return {v: i for i, v in enumerate(self.labels)}


@dataclass(frozen=True)
class PartialAction(_Labelled):
    group: FiniteGroup
    space_size: int
    graphs: tuple[Graph, ...]
    labels: Optional[tuple] = field(default=None, compare=True)

    def __post_init__(self):
        if self.space_size < 1:
            raise BadParams(f'space size must be positive, got {self.space_size}')
        object.__setattr__(self, 'graphs', _normalize_graphs(self.group, self.space_size, self.graphs))
        object.__setattr__(self, 'labels', _normalize_labels(self.labels, self.space_size))

    @cached_property
    def maps(self) -> tuple[dict[int, int], ...]:
        """eta_g as a dict, assuming the graphs are functional"""
        return tuple(dict(graph) for graph in self.graphs)

    def defined_at(self, x: int) -> tuple[int, ...]:
        """G^x: the group elements g for which g.x is defined"""
        return tuple(g for g in self.group.elements if x in self.maps[g])

    @cached_property
    def domain(self) -> tuple[tuple[int, int], ...]:
        """G*X as (g, x) pairs"""
        return tuple((g, x) for g, graph in enumerate(self.graphs) for x, _ in graph)

    def __repr__(self):
        return f'PartialAction(order={self.group.order}, space_size={self.space_size}, domain={len(self.domain)})'


@dataclass(frozen=True)
class GlobalAction(_Labelled):
    group: FiniteGroup
    space_size: int
    perm: tuple[tuple[int, ...], ...]
    labels: Optional[tuple] = None

    def __post_init__(self):
        perm = tuple(tuple(int(y) for y in p) for p in self.perm)
        if len(perm) != self.group.order or any(len(p) != self.space_size for p in perm):
            raise BadParams(f'expected {self.group.order} permutations of {self.space_size} points')
        object.__setattr__(self, 'perm', perm)
        object.__setattr__(self, 'labels', _normalize_labels(self.labels, self.space_size))

    def as_partial(self) -> PartialAction:
        graphs = [list(enumerate(p)) for p in self.perm]
        return PartialAction(self.group, self.space_size, graphs, self.labels)

    def __repr__(self):
        return f'GlobalAction(order={self.group.order}, space_size={self.space_size})'


def validate_global_action(u: GlobalAction) -> GlobalAction:
    """Check that perm is a homomorphism into the permutations of the space"""
    points = list(u.points)
    for g, p in enumerate(u.perm):
        if sorted(p) != points:
            raise InvalidPartialAction(f'u_{g} is not a permutation')
    if list(u.perm[0]) != points:
        raise InvalidPartialAction('u_1 is not the identity')
    G = u.group
    for g in G.elements:
        for h in G.elements:
            gh = u.perm[G.op(g, h)]
            if any(u.perm[g][u.perm[h][y]] != gh[y] for y in points):
                raise InvalidPartialAction(f'u_{g} u_{h} != u_{G.op(g, h)}')
    return u


"""Operations"""
def act(pa: PartialAction, g: int, x: int):
    """g.x, or Undefined"""
    if not (0 <= g < pa.group.order and 0 <= x < pa.space_size):
        raise BadParams(f'({g}, {x}) out of range')
    return pa.maps[g].get(x, Undefined)

def saturate(pa: PartialAction, U: Iterable[int]) -> frozenset[int]:
    """G^U.U, the union of eta_g(U n X_{g^-1}) over all g"""
    U = frozenset(U)
    return frozenset(y for m in pa.maps for x, y in m.items() if x in U)

def is_invariant(pa: PartialAction, U: Iterable[int]) -> bool:
    U = frozenset(U)
    return saturate(pa, U) <= U

def is_free(pa: PartialAction) -> bool:
    """No g != 1 fixes a point where it is defined"""
    return not any(x == y for graph in pa.graphs[1:] for x, y in graph)

def restrict_to_subgroup(pa: PartialAction, H: Iterable[int]) -> PartialAction:
    """eta_H, as a partial action of H (re-indexed in increasing order) on the same space"""
    sub, elements = pa.group.subgroup_group(H)
    return PartialAction(sub, pa.space_size, [pa.graphs[h] for h in elements], pa.labels)

def induce_from_global(u: GlobalAction, S: Iterable[int]) -> PartialAction:
    """Restrict u to S: X_g = S n u_g(S) and eta_g = u_g on X_{g^-1}.

    Points of the result are the elements of S in increasing order, labelled by their
    label in u.
    """
    S = sorted(set(int(y) for y in S))
    if not S:
        raise EmptySubset('cannot induce a partial action on the empty set')
    if S[0] < 0 or S[-1] >= u.space_size:
        raise BadParams(f'subset must lie in 0..{u.space_size-1}')
    local = {y: i for i, y in enumerate(S)}
    graphs = [[(local[y], local[p[y]]) for y in S if p[y] in local] for p in u.perm]
    labels = [u.label(y) for y in S]
    logger.debug('induced partial action on %d of %d points', len(S), u.space_size)
    return PartialAction(u.group, len(S), graphs, labels)

def hat_action(pa: PartialAction) -> PartialAction:
    """Partial action on G x X: (h, x) -> (h g^-1, eta_g(x)) for x in X_{g^-1}.

    The point (h, x) has index h*m + x.
    """
    G, m = pa.group, pa.space_size
    graphs = []
    for g in G.elements:
        g_inv = G.inv(g)
        graphs.append([(h*m + x, G.op(h, g_inv)*m + y)
                       for h in G.elements for x, y in pa.graphs[g]])
    labels = [(h, pa.label(x)) for h in G.elements for x in pa.points]
    return PartialAction(G, G.order * m, graphs, labels)


def require_valid(pa: PartialAction) -> PartialAction:
    """Raise InvalidPartialAction unless pa satisfies the axioms"""
    from paract.core.axioms import validate_partial_action
    report = validate_partial_action(pa)
    if not report.valid:
        raise InvalidPartialAction(f'not a partial action: {report.violations[0]}')
    return pa
