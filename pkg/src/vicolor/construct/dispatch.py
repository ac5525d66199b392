"""Entry points choosing the right constructive colorer for a graph."""
from __future__ import annotations

from typing import Optional

from ..checker import ViColoring, verify
from ..graph import Graph, components, degeneracy_order, girth
from ..outerplanar import NotOuterplanar, is_outerplanar, outer_cycle
from .basic import cycle_colors, forest_colors
from .common import ConstructionError, Trace, delta, graph_adj
from .degenerate import degenerate_colors
from .girth import NoApplicableTheorem, girth_colors
from .reductions import reduction_colors
from .subcubic import subcubic_colors

STRATEGIES = ("auto", "outerplanar", "girth", "degenerate")


def _checked(g: Graph, colors: dict, s: int) -> ViColoring:
    c = ViColoring(colors)
    report = verify(g, c)
    if not report.valid or report.max_spread > s:
        raise ConstructionError(f"internal error: produced an invalid coloring ({report.violations[:1]})")
    return c


def color_outerplanar(g: Graph, trace: Optional[Trace] = None) -> ViColoring:
    """Coloring with at most Δ+3 colors (6 when Δ = 3) and spread at most 2.

    Components with Δ ≤ 2 are paths or cycles; Δ = 3 uses end-face
    induction on blocks, Δ ≥ 4 the pendant / 2-vertex reductions.
    """
    if is_outerplanar(g) is None:
        raise NotOuterplanar("graph is not outerplanar")
    adj = graph_adj(g)
    out: dict = {}
    for comp in components(adj):
        sub = {v: adj[v] for v in comp}
        d = delta(sub)
        if d <= 1 or (d == 2 and len(comp) - 1 == sum(len(sub[v]) for v in comp) // 2):
            out.update(forest_colors(sub))
        elif d == 2:
            cyc = outer_cycle(comp, [(u, w) for u in comp for w in sub[u] if u < w])
            out.update(cycle_colors(cyc, 2))
        elif d == 3:
            out.update(subcubic_colors(sub, trace))
        else:
            out.update(reduction_colors(sub, trace))
    return _checked(g, out, 2)


def color_outerplanar_girth(g: Graph, trace: Optional[Trace] = None) -> ViColoring:
    """Spread-1 coloring of a triangle-free outerplanar graph.

    At most 6 colors when Δ = 3, Δ+2 when Δ ≥ 5 or when Δ = 4 and the
    girth is at least 6, and Δ+3 otherwise.  Raises NoApplicableTheorem on
    graphs with triangles.
    """
    if is_outerplanar(g) is None:
        raise NotOuterplanar("graph is not outerplanar")
    return _checked(g, girth_colors(graph_adj(g), trace), 1)


def color(g: Graph, spread: int = 2, strategy: str = "auto", trace: Optional[Trace] = None) -> ViColoring:
    """Pick a colorer.

    ``auto`` with spread 1 tries the girth colorer and falls back to the
    spread-2 outerplanar colorer on triangles; with spread 2 it uses the
    outerplanar colorer, or the degeneracy greedy for other graphs.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if spread not in (1, 2):
        raise ValueError("spread must be 1 or 2")
    if strategy == "degenerate":
        return _checked(g, degenerate_colors(graph_adj(g), spread, trace), spread)
    if strategy == "girth":
        return color_outerplanar_girth(g, trace)
    if strategy == "outerplanar":
        return color_outerplanar(g, trace)
    outer = is_outerplanar(g) is not None
    if spread == 1 and outer:
        if girth(g) >= 4:
            return color_outerplanar_girth(g, trace)
        if trace is not None:
            trace.add("fallback", reason="triangle; no spread-1 bound applies", spread=2)
        return color_outerplanar(g, trace)
    if outer:
        return color_outerplanar(g, trace)
    _, k = degeneracy_order(graph_adj(g))
    return _checked(g, degenerate_colors(graph_adj(g), max(k, spread), trace), max(k, spread))


__all__ = ["color", "color_outerplanar", "color_outerplanar_girth", "NoApplicableTheorem", "STRATEGIES"]
