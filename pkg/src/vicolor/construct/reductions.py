"""(Δ+3)-colorings with spread at most 2 of outerplanar graphs with Δ ≥ 4.

Every outerplanar graph has a pendant vertex, two adjacent 2-vertices, or a
2-vertex whose neighbours are adjacent.  Deleting that configuration gives a
smaller graph; once Δ drops below 4 the degeneracy greedy (k = 2) takes over
with at most Δ'+4 ≤ 7 colors, and a 5-vertex graph with Δ = 4 is a spanning
subgraph of the 5-vertex fan, whose stored coloring is restricted.
"""
from __future__ import annotations

from typing import Optional

from ..graph import Adjacency, Incidence
from ..outerplanar import AdjacentTwoVertices, PendantVertex, TriangulatedTwoVertex, find_reduction
from .basic import forest_colors
from .common import Trace, adj_copy, complete, delta, extend_with_fallback, i2_colors, neighbourhood
from .degenerate import degenerate_colors
from .fixtures import colors_from_supergraph, load_fixtures

SPREAD = 2


def _group(adj: Adjacency, colors: dict, v: int) -> Optional[list]:
    g = sorted(i2_colors(adj, colors, v))
    return g or None


def pendant_case(adj: Adjacency, colors: dict, red: PendantVertex, budget: int, trace: Optional[Trace]) -> dict:
    """``v`` has the single neighbour ``u``: a fresh color on ``(u, v)``, ``(v, u)`` joins ``I_2(u)``."""
    v, u = red.v, red.u
    palette = _group(adj, colors, u)
    prescribed = [(Incidence(u, v), None), (Incidence(v, u), palette), (v, None)]
    new = [v, Incidence(u, v), Incidence(v, u)]
    return extend_with_fallback(adj, colors, prescribed, new, budget, SPREAD, trace, "pendant", widen=[u], vertex=v)


def adjacent_twos_case(
    adj: Adjacency, colors: dict, red: AdjacentTwoVertices, budget: int, trace: Optional[Trace]
) -> dict:
    """Path ``x v u y`` with ``v``, ``u`` of degree 2."""
    v, u, x, y = red.v, red.u, red.x, red.y
    px, py = _group(adj, colors, x), _group(adj, colors, y)
    prescribed = [
        (Incidence(x, v), None),
        (Incidence(y, u), None),
        (Incidence(v, x), px),
        (Incidence(u, y), py),
        (v, None),
        (Incidence(v, u), None),
        (Incidence(u, v), None),
        (u, None),
    ]
    new = [v, u] + [Incidence(p, q) for p, q in ((x, v), (v, x), (v, u), (u, v), (u, y), (y, u))]
    return extend_with_fallback(
        adj, colors, prescribed, new, budget, SPREAD, trace, "adjacent-2-vertices", widen=[x, y], path=[x, v, u, y]
    )


def triangulated_two_case(
    adj: Adjacency, colors: dict, red: TriangulatedTwoVertex, budget: int, trace: Optional[Trace]
) -> dict:
    """2-vertex ``v`` with adjacent neighbours ``u``, ``w``.

    ``(v, w)`` copies the color of ``(u, w)`` and ``(v, u)`` that of ``(w, u)``,
    so neither ``I_2`` group gains a color.
    """
    v, u, w = red.v, red.u, red.w
    r, s = colors[Incidence(u, w)], colors[Incidence(w, u)]
    prescribed = [
        (Incidence(v, w), [r]),
        (Incidence(v, u), [s]),
        (Incidence(u, v), None),
        (Incidence(w, v), None),
        (v, None),
    ]
    new = [v] + [Incidence(p, q) for p, q in ((v, u), (u, v), (v, w), (w, v))]
    return extend_with_fallback(
        adj, colors, prescribed, new, budget, SPREAD, trace, "triangulated-2-vertex", widen=[u, w], vertex=v
    )


def _removed(red) -> list[int]:
    if isinstance(red, AdjacentTwoVertices):
        return [red.v, red.u]
    return [red.v]


def reduction_colors(adj: Adjacency, trace: Optional[Trace] = None) -> dict:
    """(Δ+3)-coloring with spread ≤ 2 of an outerplanar graph with Δ ≥ 4."""
    work = adj_copy(adj)
    ops: list[tuple] = []  # (kind, payload, saved adjacency rows, budget)
    while True:
        isolated = [v for v in work if not work[v]]
        if isolated and len(isolated) < len(work):
            for v in isolated:
                del work[v]
                ops.append(("isolated", v, None, None))
            continue
        d = delta(work)
        if d <= 3:
            colors = degenerate_colors(work, 2) if d >= 2 else forest_colors(work)
            if trace is not None:
                trace.add("base-degenerate", max_degree=d, vertices=len(work))
            break
        if len(work) == 5:
            colors = colors_from_supergraph(work, load_fixtures()["fan5"])
            if colors is None:
                colors = complete(work, {}, neighbourhood(work, sorted(work)), d + 3, SPREAD)
            if trace is not None:
                trace.add("base-fixture", vertices=sorted(work))
            break
        red = find_reduction(work)
        gone = _removed(red)
        saved = {v: set(work[v]) for v in gone}
        for v in gone:
            for w in work.pop(v):
                if w in work:
                    work[w].discard(v)
        ops.append(("reduce", red, saved, d + 3))
    for kind, red, saved, budget in reversed(ops):
        if kind == "isolated":
            work[red] = set()
            colors[red] = 1
            continue
        for v, nbrs in saved.items():
            work[v] = set(nbrs)
            for w in nbrs:
                work.setdefault(w, set()).add(v)
        if isinstance(red, PendantVertex):
            colors = pendant_case(work, colors, red, budget, trace)
        elif isinstance(red, AdjacentTwoVertices):
            colors = adjacent_twos_case(work, colors, red, budget, trace)
        else:
            colors = triangulated_two_case(work, colors, red, budget, trace)
    return colors
