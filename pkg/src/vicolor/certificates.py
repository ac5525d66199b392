"""Lower-bound certificates and vi-class classification.

Four small subcubic patterns force at least 6 colors when their degree-3
vertices are degree-3 vertices of the host (there the spread lemma pins the
``I_2`` groups to one color each).  ``classify`` combines that with the
``Δ+2`` clique bound, constructive upper bounds and bounded exact search.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .checker import ViColoring, lower_bound
from .exact import default_node_limit, is_colorable
from .graph import Graph, degeneracy_order, girth
from .outerplanar import is_outerplanar

# Patterns as (vertex labels, edges).  Degree-3 vertices must land on
# degree-3 host vertices; the rest may land anywhere.
PATTERNS: dict[str, tuple[tuple[str, ...], tuple[tuple[str, str], ...]]] = {
    # K_4 minus the edge cd
    "G1": (("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "b"))),
    # triangle abc with a pendant edge at each corner
    "G2": (
        ("a", "b", "c", "d", "e", "f"),
        (("d", "c"), ("c", "a"), ("a", "b"), ("b", "c"), ("a", "e"), ("b", "f")),
    ),
    # triangle abc glued along ab to the 4-cycle a b e d, pendant f at e
    "G3": (
        ("a", "b", "c", "d", "e", "f"),
        (("e", "d"), ("d", "a"), ("a", "b"), ("b", "e"), ("e", "f"), ("a", "c"), ("c", "b")),
    ),
    # triangle abc, 5-cycle a b e f d, pendants h at d and k at e
    "G4": (
        ("a", "b", "c", "d", "e", "f", "h", "k"),
        (
            ("k", "e"),
            ("e", "f"),
            ("f", "d"),
            ("d", "h"),
            ("e", "b"),
            ("b", "a"),
            ("a", "d"),
            ("a", "c"),
            ("c", "b"),
        ),
    ),
}


@dataclass(frozen=True)
class ForbiddenEmbedding:
    pattern: str
    mapping: tuple  # ((pattern vertex, host vertex), ...)

    def as_dict(self) -> dict:
        return dict(self.mapping)


def pattern_graph(name: str) -> tuple[Graph, tuple[str, ...]]:
    labels, edges = PATTERNS[name]
    index = {x: i for i, x in enumerate(labels)}
    return Graph(len(labels), [(index[a], index[b]) for a, b in edges]), labels


def _embeddings(pattern: Graph, host: Graph, first_only: bool) -> list[dict]:
    # match in BFS order so each new vertex has a matched neighbour when possible
    order: list[int] = []
    for root in range(pattern.n):
        if root in order:
            continue
        order.append(root)
        i = len(order) - 1
        while i < len(order):
            for w in pattern.adj[order[i]]:
                if w not in order:
                    order.append(w)
            i += 1
    need_three = [pattern.degree(p) == 3 for p in range(pattern.n)]
    found: list[dict] = []
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def ok(p: int, h: int) -> bool:
        if h in used:
            return False
        if need_three[p] and host.degree(h) != 3:
            return False
        if host.degree(h) < pattern.degree(p):
            return False
        return all(host.has_edge(h, mapping[q]) for q in pattern.adj[p] if q in mapping)

    def go(i: int) -> bool:
        if i == len(order):
            found.append(dict(mapping))
            return first_only
        p = order[i]
        anchors = [mapping[q] for q in pattern.adj[p] if q in mapping]
        cands = host.adj[anchors[0]] if anchors else range(host.n)
        for h in cands:
            if ok(p, h):
                mapping[p] = h
                used.add(h)
                if go(i + 1):
                    return True
                del mapping[p]
                used.discard(h)
        return False

    go(0)
    return found


def detect_forbidden(g: Graph, first_only: bool = False) -> list[ForbiddenEmbedding]:
    """Degree-respecting embeddings of the four patterns into a host with Δ = 3.

    Hosts with Δ ≠ 3 get an empty list: for Δ ≥ 4 the bound Δ+2 ≥ 6 already
    holds and the patterns say nothing more.
    """
    if g.max_degree != 3:
        return []
    out: list[ForbiddenEmbedding] = []
    for name in sorted(PATTERNS):
        pg, labels = pattern_graph(name)
        for m in _embeddings(pg, g, first_only):
            out.append(ForbiddenEmbedding(name, tuple((labels[p], h) for p, h in sorted(m.items()))))
            if first_only:
                return out
    return out


# --- classification ---------------------------------------------------------


@dataclass(frozen=True)
class WitnessColoring:
    k: int
    coloring: ViColoring
    source: str  # which colorer produced it

    kind = "witness"


@dataclass(frozen=True)
class ForbiddenSubgraph:
    embedding: ForbiddenEmbedding

    kind = "forbidden-subgraph"


@dataclass(frozen=True)
class ExhaustedSearch:
    k: int  # no k-coloring exists
    nodes: int

    kind = "exhausted-search"


@dataclass(frozen=True)
class CliqueBound:
    k: int

    kind = "clique"


Evidence = Union[WitnessColoring, ForbiddenSubgraph, ExhaustedSearch, CliqueBound]


@dataclass
class ClassCertificate:
    lo: int
    hi: int
    max_degree: int
    lower: list = field(default_factory=list)  # evidence for lo
    upper: Optional[WitnessColoring] = None  # evidence for hi

    @property
    def tight(self) -> bool:
        return self.lo == self.hi

    @property
    def vi_class(self) -> Optional[int]:
        """``χ_vi - Δ - 1`` when the interval is tight, else None."""
        return self.hi - self.max_degree - 1 if self.tight else None

    @property
    def kind(self) -> str:
        if self.tight and self.lower:
            return self.lower[-1].kind
        return self.upper.kind if self.upper is not None else "none"


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _upper(g: Graph) -> WitnessColoring:
    from .construct import color_complete, color_degenerate, color_outerplanar, color_outerplanar_girth

    cands: list[WitnessColoring] = []
    if _is_complete(g):
        c = color_complete(g.n)
        cands.append(WitnessColoring(c.k, c, "complete"))
    if is_outerplanar(g) is not None:
        c = color_outerplanar(g)
        cands.append(WitnessColoring(c.k, c, "outerplanar"))
        if girth(g) >= 4:
            c = color_outerplanar_girth(g)
            cands.append(WitnessColoring(c.k, c, "outerplanar-girth"))
    else:
        _, k = degeneracy_order(g.to_adj())
        c = color_degenerate(g, max(k, 1))
        cands.append(WitnessColoring(c.k, c, "degenerate"))
    return min(cands, key=lambda w: w.k)


def classify(g: Graph, budget: Optional[int] = None) -> ClassCertificate:
    """Interval for ``χ_vi(g)`` with the evidence behind each end.

    ``budget`` caps the nodes of each exact decision (default from
    ``VIC_NODE_LIMIT``; unlimited when unset).
    """
    if g.m == 0:
        raise ValueError("graph has no edges")
    if budget is None:
        budget = default_node_limit()
    delta = g.max_degree
    lo = lower_bound(g)
    lower: list = [CliqueBound(lo)]
    forb = detect_forbidden(g, first_only=True)
    if forb and lo < 6:
        lo = 6
        lower.append(ForbiddenSubgraph(forb[0]))
    upper = _upper(g)
    hi = upper.k
    while lo < hi:
        res = is_colorable(g, lo, node_limit=budget)
        if res.sat:
            hi = lo
            upper = WitnessColoring(lo, res.witness, "exact")
        elif res.unsat:
            lower.append(ExhaustedSearch(lo, res.nodes))
            lo += 1
        else:
            break
    return ClassCertificate(lo, hi, delta, lower, upper)
