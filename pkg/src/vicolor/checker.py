"""Verification of vi-simultaneous colorings.

``verify`` rebuilds the adjacent-or-incident relation straight from the
graph; it never goes through ``G^{3/3}``, so the two constructions can be
checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Adjacency, Element, Graph, Incidence, as_adj, element_key, element_neighbors


class PartialColoring(ValueError):
    pass


class NotApplicable(ValueError):
    pass


@dataclass
class ViColoring:
    """Assignment of positive integer colors to vertices and incidences."""

    colors: dict = field(default_factory=dict)

    def __getitem__(self, x: Element) -> int:
        return self.colors[x]

    def __setitem__(self, x: Element, c: int) -> None:
        self.colors[x] = c

    def __contains__(self, x: Element) -> bool:
        return x in self.colors

    def __len__(self) -> int:
        return len(self.colors)

    def get(self, x: Element, default=None):
        return self.colors.get(x, default)

    @property
    def k(self) -> int:
        """Largest color used (colors live in ``1..k``)."""
        return max(self.colors.values(), default=0)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    def copy(self) -> "ViColoring":
        return ViColoring(dict(self.colors))

    def permuted(self, perm: Mapping[int, int]) -> "ViColoring":
        return ViColoring({x: perm.get(c, c) for x, c in self.colors.items()})

    def relabeled(self, vmap: Mapping[int, int]) -> "ViColoring":
        """Rename graph vertices through ``vmap`` (old id -> new id)."""
        out = {}
        for x, c in self.colors.items():
            if isinstance(x, Incidence):
                out[Incidence(vmap[x.vertex], vmap[x.other])] = c
            else:
                out[vmap[x]] = c
        return ViColoring(out)

    def restricted(self, adj: Adjacency) -> "ViColoring":
        """Keep only the elements of the (sub)graph ``adj``."""
        out = {}
        for v in adj:
            out[v] = self.colors[v]
            for u in adj[v]:
                out[Incidence(v, u)] = self.colors[Incidence(v, u)]
        return ViColoring(out)


@dataclass
class Violation:
    first: Element
    second: Element
    reason: str  # adjacent-tt | adjacent-ii | incident-ti


@dataclass
class CheckReport:
    valid: bool
    violations: list
    spread: dict  # vertex -> |c(I_2(v))|

    @property
    def max_spread(self) -> int:
        return max(self.spread.values(), default=0)


def _reason(x: Element, y: Element) -> str:
    xi, yi = isinstance(x, Incidence), isinstance(y, Incidence)
    if xi and yi:
        return "adjacent-ii"
    if not xi and not yi:
        return "adjacent-tt"
    return "incident-ti"


def spread_of(adj: Adjacency, c: ViColoring | Mapping, v: int) -> int:
    """Number of distinct colors on ``I_2(v)``; 0 for isolated vertices."""
    return len({c[Incidence(u, v)] for u in adj[v]})


def spread(g: Graph, c: ViColoring, v: int) -> int:
    return spread_of(g.adj, c, v)


def _domain(adj: Adjacency) -> Iterable[Element]:
    for v in adj:
        yield v
        for u in adj[v]:
            yield Incidence(v, u)


def verify(g: Graph | Adjacency, c: ViColoring) -> CheckReport:
    """Check every adjacent-or-incident pair; report all violations."""
    adj = as_adj(g)
    colors = c.colors if isinstance(c, ViColoring) else c
    dom = list(_domain(adj))
    missing = [x for x in dom if x not in colors]
    if missing:
        missing.sort(key=element_key)
        raise PartialColoring(f"{len(missing)} elements uncolored, e.g. {missing[:5]}")
    bad = [x for x in dom if not (isinstance(colors[x], int) and colors[x] >= 1)]
    if bad:
        raise ValueError(f"colors must be positive integers: {bad[:5]}")
    violations = []
    for x in dom:
        kx = element_key(x)
        for y in element_neighbors(adj, x):
            if element_key(y) > kx and colors[x] == colors[y]:
                violations.append(Violation(x, y, _reason(x, y)))
    violations.sort(key=lambda t: (element_key(t.first), element_key(t.second)))
    spreads = {v: spread_of(adj, colors, v) for v in adj}
    return CheckReport(not violations, violations, spreads)


def is_proper(g: Graph | Adjacency, c: ViColoring, k: int | None = None, s: int | None = None) -> bool:
    """Valid, uses colors within ``1..k`` and has spread at most ``s``."""
    try:
        rep = verify(g, c)
    except PartialColoring:
        return False
    if not rep.valid:
        return False
    if k is not None and c.k > k:
        return False
    if s is not None and rep.max_spread > s:
        return False
    return True


def lower_bound(g: Graph) -> int:
    """``Δ+2`` from the clique ``I_1[v] ∪ {(u, v)}`` at a max-degree vertex."""
    if g.m == 0:
        return 1 if g.n else 0
    return g.max_degree + 2


def verify_spread_lemma(g: Graph, c: ViColoring) -> bool:
    """In a (Δ+2)-coloring every vertex has ``|c(I_2(v))| <= Δ - d(v) + 1``."""
    delta = g.max_degree
    if c.k != delta + 2:
        raise NotApplicable(f"coloring uses {c.k} colors, lemma needs exactly Δ+2 = {delta + 2}")
    rep = verify(g, c)
    if not rep.valid:
        raise NotApplicable("coloring is not proper")
    return all(rep.spread[v] <= delta - g.degree(v) + 1 for v in range(g.n) if g.degree(v) > 0)
