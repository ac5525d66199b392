"""Canonical labeling of small graphs by partition refinement and backtracking.

Adequate up to roughly a dozen vertices.  Twin vertices (same neighbourhood
apart from each other) are interchangeable, so only one of them is ever
individualized; this keeps highly symmetric graphs cheap.
"""
from __future__ import annotations

from .graph import Graph


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(bin(masks[v] & cm).count("1") for cm in cell_masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for key in keys:
                    out.append([v for v in cell if sig[v] == key])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _certificate(masks: list[int], order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    cert = 0
    for i, v in enumerate(order):
        row = 0
        m = masks[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            row |= 1 << (n - 1 - pos[w])
            m ^= low
        cert = (cert << n) | row
    return cert


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(certificate, order)``; ``order[i]`` is the vertex placed at position ``i``.

    Two graphs are isomorphic iff their certificates (and orders) agree.
    """
    n = g.n
    masks = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    if n == 0:
        return 0, []
    best: list = [None, None]

    def twin_reps(cell: list[int]) -> list[int]:
        reps: list[int] = []
        for v in cell:
            if not any(
                (masks[v] & ~(1 << r)) == (masks[r] & ~(1 << v)) for r in reps
            ):
                reps.append(v)
        return reps

    def search(cells: list[list[int]]) -> None:
        cells = _refine(masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(masks, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        for v in twin_reps(cell):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    degs = sorted({len(a) for a in g.adj})
    search([[v for v in range(n) if len(g.adj[v]) == d] for d in degs])
    return best[0], best[1]


def canonical_form(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, canonical_labeling(g)[0]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_key(a) == canonical_key(b)
