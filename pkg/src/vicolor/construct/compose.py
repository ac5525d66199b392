"""Merging colorings of the two sides of a cut edge or a cut vertex."""
from __future__ import annotations

from typing import Mapping, Optional, Union

from ..checker import ViColoring
from ..graph import Graph, Incidence
from .common import SpreadViolation


class PermutationNotFound(AssertionError):
    pass


def _colors(c: Union[ViColoring, Mapping]) -> dict:
    return dict(c.colors) if isinstance(c, ViColoring) else dict(c)


def _complete_perm(fixed: dict, size: int) -> dict:
    """Extend an injective partial map on ``1..size`` to a permutation."""
    if len(set(fixed.values())) != len(fixed):
        raise PermutationNotFound("color identifications are not injective")
    free_src = [c for c in range(1, size + 1) if c not in fixed]
    free_dst = [c for c in range(1, size + 1) if c not in set(fixed.values())]
    perm = dict(fixed)
    perm.update(zip(free_src, free_dst))
    return perm


def compose_cut_edge_colors(c1: Mapping, c2: Mapping, u: int, v: int) -> dict:
    """Merge colorings of ``H_1 = C_1 + uv`` and ``H_2 = C_2 + uv``.

    The four elements of the shared edge form a clique in both, so permuting
    the second coloring to agree with the first on them is always possible.
    """
    c1, c2 = dict(c1), dict(c2)
    shared = [u, v, Incidence(u, v), Incidence(v, u)]
    for x in shared:
        if x not in c1 or x not in c2:
            raise ValueError(f"{x!r} missing from one side; is {u}-{v} in both parts?")
    size = max(max(c1.values()), max(c2.values()))
    perm = _complete_perm({c2[x]: c1[x] for x in shared}, size)
    out = dict(c1)
    for x, c in c2.items():
        out[x] = perm[c]
    return out


def compose_cut_vertex_colors(c1: Mapping, c2: Mapping, v: int) -> dict:
    """Merge (k_1,1)- and (k_2,1)-colorings of two graphs sharing only ``v``.

    Uses ``max(k_1, k_2, deg(v) + 2)`` colors: ``v`` and the single color of
    ``I_2(v)`` are identified, the second side's ``I_1(v)`` moves to colors
    unused at ``v`` on the first side.
    """
    c1, c2 = dict(c1), dict(c2)
    out1 = sorted(x.other for x in c1 if isinstance(x, Incidence) and x.vertex == v)
    out2 = sorted(x.other for x in c2 if isinstance(x, Incidence) and x.vertex == v)
    if set(out1) & set(out2):
        raise ValueError("the two parts share more than the cut vertex")
    i2_1 = {c1[Incidence(w, v)] for w in out1}
    i2_2 = {c2[Incidence(w, v)] for w in out2}
    if len(i2_1) > 1 or len(i2_2) > 1:
        raise SpreadViolation(f"spread at cut vertex {v} exceeds 1")
    k1, k2 = max(c1.values()), max(c2.values())
    size = max(k1, k2, len(out1) + len(out2) + 2)
    fixed = {c2[v]: c1[v]}
    if i2_2:
        (a2,) = i2_2
        a1 = next(iter(i2_1)) if i2_1 else None
        if a1 is None:
            a1 = next(c for c in range(1, size + 1) if c != c1[v])
        fixed[a2] = a1
    taken = {c1[v]} | i2_1 | {c1[Incidence(v, w)] for w in out1} | set(fixed.values())
    spare = (c for c in range(1, size + 1) if c not in taken)
    for w in out2:
        fixed[c2[Incidence(v, w)]] = next(spare)
    perm = _complete_perm(fixed, size)
    out = dict(c1)
    for x, c in c2.items():
        out[x] = perm[c]
    # when the first side has no incidences at v its I_2 color was free; the
    # choice above guarantees it still misses v's color
    return out


def compose_cut_edge(
    g: Optional[Graph], e: tuple[int, int], c1: Union[ViColoring, Mapping], c2: Union[ViColoring, Mapping]
) -> ViColoring:
    """Coloring of ``g`` from colorings of the two sides of the cut edge ``e``.

    ``c1`` and ``c2`` use the vertex ids of ``g``; each covers its side plus ``e``.
    """
    u, v = e
    merged = compose_cut_edge_colors(_colors(c1), _colors(c2), u, v)
    if g is not None:
        _check_cover(g, merged)
    return ViColoring(merged)


def compose_cut_vertex(
    g: Optional[Graph], v: int, c1: Union[ViColoring, Mapping], c2: Union[ViColoring, Mapping]
) -> ViColoring:
    """Coloring of ``g`` from spread-1 colorings of two parts meeting at ``v``."""
    merged = compose_cut_vertex_colors(_colors(c1), _colors(c2), v)
    if g is not None:
        _check_cover(g, merged)
    return ViColoring(merged)


def _check_cover(g: Graph, colors: dict) -> None:
    missing = [v for v in range(g.n) if v not in colors]
    missing += [Incidence(a, b) for a, b in g.edges if Incidence(a, b) not in colors]
    missing += [Incidence(b, a) for a, b in g.edges if Incidence(b, a) not in colors]
    if missing:
        raise ValueError(f"parts do not cover the graph, e.g. {missing[0]!r}")
