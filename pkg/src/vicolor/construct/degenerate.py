"""Greedy coloring along a degeneracy order: at most Δ+2k colors, spread at most k."""
from __future__ import annotations

from typing import Optional

from ..checker import ViColoring
from ..graph import Adjacency, Graph, Incidence, degeneracy_order
from .common import ConstructionError, Trace, complete, delta, graph_adj, greedy_steps, i2_colors


class DegeneracyTooLarge(ValueError):
    pass


def degenerate_colors(adj: Adjacency, k: int, trace: Optional[Trace] = None) -> dict:
    """Add vertices in reverse smallest-last order; each has at most ``k`` earlier neighbours.

    For a new vertex ``v`` with earlier neighbours ``u_1..u_t`` the
    incidences ``(v, u_j)`` go first (reusing a color of ``I_2(u_j)`` when
    that group is full), then ``(u_j, v)`` preferring colors already on
    ``I_2(v)``, then ``v`` itself.  Should a vertex get stuck the new
    elements are completed exhaustively instead.
    """
    order, degen = degeneracy_order(adj)
    if degen > k:
        raise DegeneracyTooLarge(f"graph is {degen}-degenerate, not {k}-degenerate")
    budget = max(delta(adj) + 2 * k, 1)
    present: dict[int, set[int]] = {}
    colors: dict = {}
    for v in reversed(order):
        back = sorted(u for u in adj[v] if u in present)
        present[v] = set(back)
        for u in back:
            present[u].add(v)
        steps: list = []
        for u in back:
            full = i2_colors(present, colors, u)
            steps.append((Incidence(v, u), sorted(full) if len(full) >= k else None))
        for u in back:
            steps.append((Incidence(u, v), _prefer(colors, back, v, budget)))
        steps.append((v, None))
        trial = dict(colors)
        if greedy_steps(present, trial, steps, budget, k):
            colors = trial
            route = "greedy"
        else:
            new = [v] + [Incidence(v, u) for u in back] + [Incidence(u, v) for u in back]
            done = complete(present, colors, new, budget, k)
            if done is None:
                raise ConstructionError(f"degeneracy greedy stuck at vertex {v}")
            colors = done
            route = "local"
        if trace is not None:
            trace.add("degenerate-add", vertex=v, back=back, route=route)
    return colors


def _prefer(colors: dict, back: list, v: int, budget: int) -> list:
    # colors already used on I_2(v) first, so the vertex keeps more room
    used = [colors[Incidence(u, v)] for u in back if Incidence(u, v) in colors]
    head = list(dict.fromkeys(used))
    return head + [c for c in range(1, budget + 1) if c not in head]


def color_degenerate(g: Graph, k: int, trace: Optional[Trace] = None) -> ViColoring:
    """Coloring of a k-degenerate graph with at most Δ+2k colors and spread at most k."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.max_degree < 2:
        # a lone edge already needs 4 > Δ + 2 colors
        raise ValueError("the Δ+2k bound needs Δ >= 2")
    return ViColoring(degenerate_colors(graph_adj(g), k, trace))
