"""6-colorings with spread at most 2 of outerplanar graphs with Δ ≤ 3.

2-connected blocks are reduced along end faces:

* triangle ``[a, b, c]``: delete ``b``;
* quadrilateral ``[a, b, c, d]``: delete ``b`` and ``c``;
* longer face ``[v_0, v_1, v_2, v_3, ...]``: add the chord ``v_1 v_3``,
  which cuts off a triangle and keeps Δ = 3.

until a cycle or ``K_4 - e`` is left.  The extensions are replayed in
reverse.  Bridges either hang a pendant vertex (colored last) or split the
graph into two parts merged by a color permutation.
"""
from __future__ import annotations

from typing import Optional

from ..graph import Adjacency, Incidence, blocks, components
from ..outerplanar import NotOuterplanar, block_end_faces, outer_cycle
from .basic import cycle_colors, forest_colors
from .common import (
    ConstructionError,
    Trace,
    adj_copy,
    complete,
    conflicts,
    delta,
    extend_with_fallback,
    i2_colors,
    neighbourhood,
)
from .compose import compose_cut_edge_colors
from .fixtures import FixtureTable

BUDGET = 6
SPREAD = 2


def _edges(adj: Adjacency) -> list[tuple[int, int]]:
    return [(u, w) for u in adj for w in adj[u] if u < w]


def _low_degree_colors(adj: Adjacency) -> dict:
    """Connected graph with Δ ≤ 2: a path or a cycle."""
    if len(adj) >= 3 and all(len(adj[v]) == 2 for v in adj):
        cyc = outer_cycle(list(adj), _edges(adj))
        return cycle_colors(cyc, SPREAD)
    return forest_colors(adj)


# --- extension steps --------------------------------------------------------


def triangle_step(adj: Adjacency, colors: dict, a: int, b: int, c: int, trace: Optional[Trace]) -> dict:
    """Put back ``b`` of the end face ``[a, b, c]`` (``adj`` already contains it)."""
    new = [b, Incidence(a, b), Incidence(b, a), Incidence(b, c), Incidence(c, b)]
    done = complete(adj, colors, new, BUDGET, SPREAD)
    if done is not None:
        if trace is not None:
            trace.add("triangle", face=[a, b, c], route="direct")
        return done
    # Both ends are saturated; the outside incidences into a and c carry two
    # colors A and B.  Move (a, c) to B and reuse the freed colors.
    (x,) = [w for w in adj[a] if w not in (b, c)]
    (y,) = [w for w in adj[c] if w not in (a, b)]
    col_a, col_b = colors[Incidence(x, a)], colors[Incidence(y, c)]
    beta, gamma = colors[Incidence(a, c)], colors[Incidence(c, a)]
    patched = dict(colors)
    patched[Incidence(a, c)] = col_b
    patched[Incidence(a, b)] = beta
    patched[Incidence(c, b)] = beta
    patched[Incidence(b, a)] = gamma
    patched[Incidence(b, c)] = col_b
    patched[b] = col_a
    touched = new + [Incidence(a, c)]
    if not conflicts(adj, patched, touched, BUDGET, SPREAD):
        if trace is not None:
            trace.add("triangle", face=[a, b, c], route="recolor")
        return patched
    extra = [e for e in neighbourhood(adj, [a, c]) if e not in new]
    done = complete(adj, colors, new, BUDGET, SPREAD, recolor=extra)
    if done is None:
        raise ConstructionError(f"triangle step failed at face {[a, b, c]}")
    if trace is not None:
        trace.add("triangle", face=[a, b, c], route="local+recolor")
    return done


def quad_step(adj: Adjacency, colors: dict, a: int, b: int, c: int, d: int, trace: Optional[Trace]) -> dict:
    """Put back ``b`` and ``c`` of the end face ``[a, b, c, d]``."""
    ad, da = colors[Incidence(a, d)], colors[Incidence(d, a)]
    prescribed = [
        (Incidence(b, a), [da]),
        (c, [da]),
        (b, [ad]),
        (Incidence(c, d), [ad]),
        (Incidence(b, c), [colors[a]]),
        (Incidence(c, b), [colors[d]]),
        (Incidence(a, b), None),
        (Incidence(d, c), None),
    ]
    new = [b, c] + [Incidence(p, q) for p, q in ((a, b), (b, a), (b, c), (c, b), (c, d), (d, c))]
    return extend_with_fallback(
        adj, colors, prescribed, new, BUDGET, SPREAD, trace, "quadrilateral", widen=[a, d], face=[a, b, c, d]
    )


def pendant_step(adj: Adjacency, colors: dict, leaf: int, v: int, budget: int, trace: Optional[Trace]) -> dict:
    """Color a degree-1 vertex ``leaf`` hanging from ``v``."""
    group = sorted(i2_colors(adj, colors, v) - {None})
    prescribed = [(Incidence(v, leaf), None), (Incidence(leaf, v), group or None), (leaf, None)]
    new = [leaf, Incidence(v, leaf), Incidence(leaf, v)]
    return extend_with_fallback(adj, colors, prescribed, new, budget, SPREAD, trace, "pendant", widen=[v], vertex=leaf)


# --- 2-connected blocks -----------------------------------------------------


def block_colors(adj: Adjacency, trace: Optional[Trace] = None) -> dict:
    """6-coloring, spread ≤ 2, of a 2-connected outerplanar graph with Δ ≤ 3."""
    work = adj_copy(adj)
    cycle = outer_cycle(list(work), _edges(work))
    if cycle is None:
        raise NotOuterplanar("block is not outerplanar")
    if delta(work) > 3:
        raise ValueError("block has a vertex of degree above 3")
    ops: list[tuple] = []
    while True:
        if delta(work) <= 2:
            colors = cycle_colors(cycle, SPREAD)
            if trace is not None:
                trace.add("base-cycle", n=len(cycle))
            break
        if len(work) == 4:
            colors = FixtureTable().lookup(work, max_spread=SPREAD, max_colors=BUDGET)
            if colors is None:
                colors = complete(work, {}, _all(work), BUDGET, SPREAD)
            if trace is not None:
                trace.add("base-fixture", vertices=sorted(work))
            break
        face = block_end_faces(cycle, work)[0].boundary
        if len(face) == 3:
            a, b, c = face
            ops.append(("triangle", face))
            _remove(work, [b])
            cycle.remove(b)
        elif len(face) == 4:
            a, b, c, d = face
            ops.append(("quadrilateral", face))
            _remove(work, [b, c])
            cycle.remove(b)
            cycle.remove(c)
        else:
            p, q = face[1], face[3]
            ops.append(("add-chord", (p, q)))
            work[p].add(q)
            work[q].add(p)
    for kind, data in reversed(ops):
        if kind == "triangle":
            a, b, c = data
            _insert_path(work, [a, b, c])
            colors = triangle_step(work, colors, a, b, c, trace)
        elif kind == "quadrilateral":
            a, b, c, d = data
            _insert_path(work, [a, b, c, d])
            colors = quad_step(work, colors, a, b, c, d, trace)
        else:
            p, q = data
            work[p].discard(q)
            work[q].discard(p)
            del colors[Incidence(p, q)], colors[Incidence(q, p)]
            if trace is not None:
                trace.add("drop-chord", chord=[p, q])
    return colors


def _all(adj: Adjacency) -> list:
    return neighbourhood(adj, sorted(adj))


def _remove(adj: dict, vs: list[int]) -> None:
    for v in vs:
        for w in adj.pop(v):
            if w in adj:
                adj[w].discard(v)


def _insert_path(adj: dict, path: list[int]) -> None:
    for p, q in zip(path, path[1:]):
        adj.setdefault(p, set()).add(q)
        adj.setdefault(q, set()).add(p)


# --- connected graphs with bridges ------------------------------------------


def _connected_colors(adj: Adjacency, trace: Optional[Trace]) -> dict:
    if delta(adj) <= 2:
        return _low_degree_colors(adj)
    bd = blocks(adj)
    if len(bd.blocks) == 1:
        return block_colors(adj, trace)
    bridges = sorted(tuple(sorted(e)) for e in bd.cut_edges)
    if not bridges:
        raise ValueError("Δ ≤ 3 graph with a cut vertex but no bridge")
    leaf_bridges = [e for e in bridges if len(adj[e[0]]) == 1 or len(adj[e[1]]) == 1]
    if leaf_bridges:
        u, v = leaf_bridges[0]
        leaf, at = (u, v) if len(adj[u]) == 1 else (v, u)
        rest = {w: set(adj[w]) - {leaf} for w in adj if w != leaf}
        colors = _connected_colors(rest, trace)
        return pendant_step(adj, colors, leaf, at, BUDGET, trace)
    u, v = bridges[0]
    side_u = _side(adj, u, v)
    h1 = {w: set(adj[w]) & (side_u | {v}) for w in side_u | {v}}
    h1[v] = {u}
    h2 = {w: set(adj[w]) - side_u for w in adj if w not in side_u}
    h2[u] = {v}
    h2[v].add(u)
    c1 = _connected_colors(h1, trace)
    c2 = _connected_colors(h2, trace)
    if trace is not None:
        trace.add("split-bridge", bridge=[u, v])
    return compose_cut_edge_colors(c1, c2, u, v)


def _side(adj: Adjacency, u: int, v: int) -> set[int]:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w not in seen and not (x == u and w == v):
                seen.add(w)
                stack.append(w)
    return seen


def subcubic_colors(adj: Adjacency, trace: Optional[Trace] = None) -> dict:
    """6-coloring with spread at most 2 of an outerplanar graph with Δ ≤ 3."""
    out: dict = {}
    for comp in components(adj):
        sub = {v: set(adj[v]) for v in comp}
        out.update(_connected_colors(sub, trace))
    return out
