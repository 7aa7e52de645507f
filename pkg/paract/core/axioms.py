"""The two equivalent axiomatizations of a partial action.

Pointwise: eta is a partially defined function G x X -> X with
    inverse      if g.x exists then g^-1.(g.x) exists and equals x
    composition  if g.(h.x) exists then (gh).x exists and equals it
    unit         1.x exists and equals x

Family: eta is a family of bijections eta_g: X_{g^-1} -> X_g with
    unit         X_1 = X and eta_1 = id
    image        eta_g(X_{g^-1} n X_h) = X_g n X_{gh}
    composition  eta_g eta_h = eta_{gh} on X_{h^-1} n X_{h^-1 g^-1}

Both are checked independently on the raw graphs; they must agree on validity.
"""
from dataclasses import dataclass, field

from paract.core.actions import PartialAction

POINTWISE = 'pointwise'
FAMILY = 'family'


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str

    @property
    def axiomatization(self) -> str:
        return self.clause.split(':')[0]

    def __str__(self):
        return f'{self.clause}: {self.detail}'


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def holds(self, axiomatization: str) -> bool:
        return not any(v.axiomatization == axiomatization for v in self.violations)

    @property
    def consistent(self) -> bool:
        """Both axiomatizations reach the same verdict"""
        return self.holds(POINTWISE) == self.holds(FAMILY)

    def clauses(self) -> list[str]:
        return sorted({v.clause for v in self.violations})

    def to_dict(self) -> dict:
        return {
            'valid': self.valid,
            'pointwise': self.holds(POINTWISE),
            'family': self.holds(FAMILY),
            'violations': [{'clause': v.clause, 'detail': v.detail} for v in self.violations],
        }


def _relations(pa: PartialAction) -> list[dict[int, set[int]]]:
    rel = [dict() for _ in pa.group.elements]
    for g, graph in enumerate(pa.graphs):
        for x, y in graph:
            rel[g].setdefault(x, set()).add(y)
    return rel


def pointwise_violations(pa: PartialAction) -> list[Violation]:
    G = pa.group
    rel = _relations(pa)
    out = []

    for g in G.elements:
        for x, ys in rel[g].items():
            if len(ys) > 1:
                out.append(Violation('pointwise:function', f'{g}.{x} has several values {sorted(ys)}'))

    for g in G.elements:
        g_inv = G.inv(g)
        for x, ys in rel[g].items():
            for y in ys:
                if x not in rel[g_inv].get(y, ()):
                    out.append(Violation('pointwise:inverse', f'{g}.{x} = {y} but {g_inv}.{y} != {x}'))

    for h in G.elements:
        for x, ys in rel[h].items():
            for y in ys:
                for g in G.elements:
                    for z in rel[g].get(y, ()):
                        gh = G.op(g, h)
                        if z not in rel[gh].get(x, ()):
                            out.append(Violation('pointwise:composition',
                                                 f'{g}.({h}.{x}) = {z} but ({gh}).{x} != {z}'))

    for x in pa.points:
        if rel[0].get(x) != {x}:
            out.append(Violation('pointwise:unit', f'1.{x} is not {x}'))
    return out


def family_violations(pa: PartialAction) -> list[Violation]:
    G = pa.group
    rel = _relations(pa)
    image = [frozenset(y for ys in r.values() for y in ys) for r in rel]  # X_g
    out = []

    # eta_g must be a bijection from X_{g^-1} (the range of eta_{g^-1}) onto X_g
    for g in G.elements:
        g_inv = G.inv(g)
        functional = all(len(ys) == 1 for ys in rel[g].values())
        injective = len(image[g]) == sum(len(ys) for ys in rel[g].values())
        if not (functional and injective):
            out.append(Violation('family:bijective', f'eta_{g} is not injective and single valued'))
        if frozenset(rel[g]) != image[g_inv]:
            out.append(Violation('family:bijective', f'domain of eta_{g} differs from X_{g_inv}'))

    if set(rel[0]) != set(pa.points) or any(ys != {x} for x, ys in rel[0].items()):
        out.append(Violation('family:unit', 'eta_1 is not the identity of X'))

    def apply(g, xs):
        return frozenset(y for x in xs for y in rel[g].get(x, ()))

    for g in G.elements:
        g_inv = G.inv(g)
        for h in G.elements:
            gh = G.op(g, h)
            lhs = apply(g, image[g_inv] & image[h])
            rhs = image[g] & image[gh]
            if lhs != rhs:
                out.append(Violation('family:image', f'eta_{g}(X_{g_inv} n X_{h}) != X_{g} n X_{gh}'))

    for g in G.elements:
        for h in G.elements:
            h_inv = G.inv(h)
            gh = G.op(g, h)
            for x in sorted(image[h_inv] & image[G.inv(gh)]):
                via = apply(g, apply(h, {x}))
                direct = rel[gh].get(x, set())
                if not via or via != direct:
                    out.append(Violation('family:composition',
                                         f'eta_{g} eta_{h} != eta_{gh} at {x}'))
    return out


def validate_partial_action(pa: PartialAction) -> ValidationReport:
    """Every violated clause of both axiomatizations; empty iff pa is a partial action"""
    return ValidationReport(pointwise_violations(pa) + family_violations(pa))
