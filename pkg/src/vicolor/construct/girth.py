"""Spread-1 colorings of triangle-free outerplanar graphs.

Budgets for a 2-connected block with maximum degree Δ and girth g:

    Δ = 2           4 if 4 | n, else 5 (cycles)
    Δ = 3, g ≥ 4    6
    Δ = 4, g ≥ 6    6
    Δ = 4, g ≥ 4    7
    Δ ≥ 5, g ≥ 4    Δ + 2

Blocks are reduced along end faces.  A short end face (4 vertices, or 6
when g ≥ 6) loses its interior; a longer one ``[v_0, v_1, v_2, ...]`` has
``v_1`` deleted and the chord ``v_0 v_2`` added, which keeps Δ and keeps
the girth above its threshold.  The extensions copy the single color of
each ``I_2`` group so the spread stays 1.  Blocks are merged at cut
vertices, which costs at most ``deg(v) + 2`` colors there.
"""
from __future__ import annotations

from typing import Optional

from ..graph import Adjacency, Incidence, blocks, components, girth
from ..outerplanar import NotOuterplanar, block_end_faces, cycle_faces, outer_cycle
from .basic import cycle_colors, forest_colors
from .common import Trace, adj_copy, delta, extend_with_fallback
from .compose import compose_cut_vertex_colors
from .fixtures import FixtureTable

SPREAD = 1


class NoApplicableTheorem(ValueError):
    """The graph has a triangle, so no spread-1 bound of this kind applies."""


def block_budget(max_deg: int, girth: int, n: int) -> int:
    if max_deg <= 1:
        return 4
    if max_deg == 2:
        return 4 if n % 4 == 0 else 5
    if girth < 4:
        raise NoApplicableTheorem("block contains a triangle")
    if max_deg == 3:
        return 6
    if max_deg == 4:
        return 6 if girth >= 6 else 7
    return max_deg + 2


def _edges(adj: Adjacency) -> list[tuple[int, int]]:
    return [(u, w) for u in adj for w in adj[u] if u < w]


def _pick_face(cycle: list[int], adj: Adjacency, max_deg: int):
    """First end face, preferring (when Δ ≥ 5) one with an end of degree at most 4.

    Oriented so the lower-degree end comes first.
    """
    faces = block_end_faces(cycle, adj)
    chosen = faces[0]
    if max_deg >= 5:
        for f in faces:
            a, b = f.ends
            if min(len(adj[a]), len(adj[b])) < 5:
                chosen = f
                break
    a, b = chosen.ends
    return chosen if len(adj[a]) <= len(adj[b]) else chosen.reversed()


# --- extension steps --------------------------------------------------------


def quad_step(adj, colors, face, budget, trace) -> dict:
    """Put back ``v_1``, ``v_2`` of the end face ``[v_0, v_1, v_2, v_3]``."""
    a, b, c, d = face
    prescribed = [
        (Incidence(b, a), [colors[Incidence(d, a)]]),
        (Incidence(c, d), [colors[Incidence(a, d)]]),
        # the face is oriented with the lower-degree end first, so the other
        # end picks while it still has a color left
        (Incidence(d, c), None),
        # (b, c) and (c, b) copy these two, and they are the same edge
        (Incidence(a, b), lambda col: [x for x in range(1, budget + 1) if x != col[Incidence(d, c)]]),
        (Incidence(c, b), lambda col: [col[Incidence(a, b)]]),
        (Incidence(b, c), lambda col: [col[Incidence(d, c)]]),
        (b, None),
        (c, None),
    ]
    new = [b, c] + [Incidence(p, q) for p, q in ((a, b), (b, a), (b, c), (c, b), (c, d), (d, c))]
    return extend_with_fallback(
        adj, colors, prescribed, new, budget, SPREAD, trace, "quadrilateral", widen=[a, d], face=list(face)
    )


def hexagon_step(adj, colors, face, budget, trace) -> dict:
    """Put back the four interior vertices of the end face ``[v_0, ..., v_5]``."""
    v0, v1, v2, v3, v4, v5 = face
    inc = Incidence
    prescribed = [
        (inc(v1, v0), [colors[inc(v5, v0)]]),
        (inc(v4, v5), [colors[inc(v0, v5)]]),
        (inc(v0, v1), None),
        (inc(v5, v4), None),
        (inc(v2, v1), lambda col: [col[inc(v0, v1)]]),
        (inc(v3, v4), lambda col: [col[inc(v5, v4)]]),
        # (v3, v2) will copy (v1, v2) into I_1(v3), next to (v3, v4)
        (inc(v1, v2), lambda col: [x for x in range(1, budget + 1) if x != col[inc(v5, v4)]]),
        # (v2, v3) will copy (v4, v3) into I_1(v2), next to (v2, v1) and (v3, v2)
        (inc(v4, v3), lambda col: [x for x in range(1, budget + 1) if x not in (col[inc(v1, v2)], col[inc(v0, v1)])]),
        # I_2(v2) and I_2(v3) each keep a single color
        (inc(v3, v2), lambda col: [col[inc(v1, v2)]]),
        (inc(v2, v3), lambda col: [col[inc(v4, v3)]]),
        (v3, None),
        (v2, None),
        (v1, None),
        (v4, None),
    ]
    new = [v1, v2, v3, v4]
    for p, q in zip(face, face[1:]):
        new += [inc(p, q), inc(q, p)]
    return extend_with_fallback(
        adj, colors, prescribed, new, budget, SPREAD, trace, "hexagon", widen=[v0, v5], face=list(face)
    )


def contraction_step(adj, colors, face, budget, trace) -> dict:
    """Undo ``G' = (G - v_1) + v_0 v_2`` for the end face ``[v_0, v_1, v_2, v_3, ...]``.

    ``adj`` is G (the chord already removed, ``v_1`` back); ``colors`` still
    carries the chord's incidences.
    """
    v0, v1, v2, v3 = face[:4]
    gamma = colors.pop(Incidence(v0, v2))
    delta_ = colors.pop(Incidence(v2, v0))
    prescribed = [
        (Incidence(v0, v1), [gamma]),
        (Incidence(v1, v0), [delta_]),
        (Incidence(v2, v1), [gamma]),
    ]
    new = [v1] + [Incidence(p, q) for p, q in ((v0, v1), (v1, v0), (v1, v2), (v2, v1))]
    # (v_3, v_2) held gamma as the I_2(v_2) color, which now sits in I_1(v_2)
    return extend_with_fallback(
        adj,
        colors,
        prescribed,
        new,
        budget,
        SPREAD,
        trace,
        "contract",
        widen=[v0, v2],
        recolor=[Incidence(v3, v2), v2],
        face=list(face[:4]),
    )


# --- blocks -----------------------------------------------------------------


def girth_block_colors(adj: Adjacency, trace: Optional[Trace] = None, table: Optional[FixtureTable] = None) -> dict:
    """Spread-1 coloring of a triangle-free 2-connected outerplanar graph within its budget."""
    work = adj_copy(adj)
    cycle = outer_cycle(list(work), _edges(work))
    if cycle is None:
        raise NotOuterplanar("block is not outerplanar")
    table = table or FixtureTable()
    ops: list[tuple] = []
    while True:
        d = delta(work)
        if d <= 2:
            colors = cycle_colors(cycle, SPREAD)
            if trace is not None:
                trace.add("base-cycle", n=len(cycle))
            break
        g = min(len(f) for f in cycle_faces(cycle, work))
        budget = block_budget(d, g, len(work))
        if len(work) <= 14:
            colors = table.lookup(work, max_spread=SPREAD, max_colors=budget)
            if colors is not None:
                if trace is not None:
                    trace.add("base-fixture", vertices=sorted(work))
                break
        face = _pick_face(cycle, work, d).boundary
        short = 6 if (d == 4 and g >= 6) else 4
        if len(face) == short:
            ops.append(("short", face, budget))
            for v in face[1:-1]:
                for w in work.pop(v):
                    if w in work:
                        work[w].discard(v)
                cycle.remove(v)
        else:
            v0, v1, v2 = face[:3]
            ops.append(("contract", face, budget))
            for w in work.pop(v1):
                work[w].discard(v1)
            cycle.remove(v1)
            work[v0].add(v2)
            work[v2].add(v0)
    for kind, face, budget in reversed(ops):
        if kind == "short":
            for p, q in zip(face, face[1:]):
                work.setdefault(p, set()).add(q)
                work.setdefault(q, set()).add(p)
            step = quad_step if len(face) == 4 else hexagon_step
            colors = step(work, colors, face, budget, trace)
        else:
            v0, v1, v2 = face[:3]
            work[v0].discard(v2)
            work[v2].discard(v0)
            work[v1] = {v0, v2}
            work[v0].add(v1)
            work[v2].add(v1)
            colors = contraction_step(work, colors, face, budget, trace)
    return colors


def girth_colors(adj: Adjacency, trace: Optional[Trace] = None) -> dict:
    """Spread-1 coloring of a triangle-free outerplanar graph, block by block."""
    if girth(adj) < 4:
        raise NoApplicableTheorem("graph contains a triangle")
    table = FixtureTable()
    out: dict = {}
    for comp in components(adj):
        sub = {v: set(adj[v]) for v in comp}
        if len(comp) == 1:
            out[comp[0]] = 1
            continue
        bd = blocks(sub)
        parts = []
        for vs in bd.blocks:
            vs = set(vs)
            badj = {v: sub[v] & vs for v in vs}
            if len(vs) == 2:
                parts.append((vs, forest_colors(badj)))
            else:
                parts.append((vs, girth_block_colors(badj, trace, table)))
        covered, merged = set(parts[0][0]), parts[0][1]
        rest = parts[1:]
        while rest:
            for i, (vs, colors) in enumerate(rest):
                shared = covered & vs
                if len(shared) == 1:
                    (v,) = shared
                    merged = compose_cut_vertex_colors(merged, colors, v)
                    if trace is not None:
                        trace.add("merge-cut-vertex", vertex=v)
                    covered |= vs
                    del rest[i]
                    break
            else:
                raise ValueError("block tree is not connected")
        out.update(merged)
    return out

