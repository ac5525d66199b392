"""Random outerplanar graphs and exhaustive enumeration of small graphs."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .canon import canonical_form, canonical_labeling
from .graph import Graph, is_connected


class Infeasible(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    delta_max: int = 3
    girth_min: int = 3
    two_connected: bool = True
    seed: int = 0
    min_delta: Optional[int] = None  # retry until Δ reaches this
    chord_density: Optional[float] = None  # fraction of the n-3 possible chords to try

    def check(self) -> None:
        if self.girth_min < 3:
            raise Infeasible("girth_min must be at least 3")
        if self.n < 1:
            raise Infeasible("n must be positive")
        if self.two_connected:
            if self.n < 3:
                raise Infeasible("a 2-connected graph needs at least 3 vertices")
            if self.delta_max < 2:
                raise Infeasible("a 2-connected graph needs Δ >= 2")
            if self.n < self.girth_min:
                raise Infeasible(f"2-connected with girth >= {self.girth_min} needs n >= {self.girth_min}")
        if self.min_delta is not None and self.min_delta > self.delta_max:
            raise Infeasible("min_delta exceeds delta_max")
        if self.min_delta is not None and self.min_delta >= self.n:
            raise Infeasible("min_delta must be below n")


def _polygon_with_chords(n: int, spec: GenSpec, rng: random.Random) -> tuple[list[tuple[int, int]], list[int]]:
    deg = [2] * n
    edges = [(i, (i + 1) % n) for i in range(n)]
    faces = [list(range(n))]
    density = spec.chord_density if spec.chord_density is not None else rng.random()
    target = int(round(density * max(0, n - 3)))
    attempts = 0
    added = 0
    while added < target and attempts < 30 * (target + 1):
        attempts += 1
        big = [f for f in faces if len(f) >= max(4, 2 * spec.girth_min - 2)]
        if not big:
            break
        face = rng.choices(big, weights=[len(f) for f in big])[0]
        size = len(face)
        open_pos = [i for i in range(size) if deg[face[i]] < spec.delta_max]
        if len(open_pos) < 2:
            continue
        # preferential choice pushes some vertices towards delta_max
        i = rng.choices(open_pos, weights=[(deg[face[p]] - 1) ** 2 for p in open_pos])[0]
        cands = []
        for j in open_pos:
            gap = (j - i) % size
            if 2 <= gap <= size - 2 and gap + 1 >= spec.girth_min and size - gap + 1 >= spec.girth_min:
                cands.append(j)
        if not cands:
            continue
        j = rng.choice(cands)
        a, b = face[i], face[j]
        lo, hi = min(i, j), max(i, j)
        faces.remove(face)
        faces.append(face[lo : hi + 1])
        faces.append(face[hi:] + face[: lo + 1])
        edges.append((a, b))
        deg[a] += 1
        deg[b] += 1
        added += 1
    return edges, deg


def _random_relabel(n: int, edges, rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def _one(spec: GenSpec, rng: random.Random) -> Graph:
    n = spec.n
    if n < 3 or (not spec.two_connected and spec.delta_max < 2):
        # only paths, matchings or single vertices remain
        if spec.delta_max == 0 or n == 1:
            return Graph(n)
        if spec.delta_max == 1:
            return Graph(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])
        return _random_relabel(n, [(i, i + 1) for i in range(n - 1)], rng)
    edges, _ = _polygon_with_chords(n, spec, rng)
    g = Graph(n, edges)
    if not spec.two_connected:
        g = _thin(g, rng)
    return _random_relabel(n, g.edges, rng)


def _thin(g: Graph, rng: random.Random) -> Graph:
    """Delete random edges while staying connected; creates bridges and pendant parts."""
    edges = list(g.edges)
    rng.shuffle(edges)
    kept = set(edges)
    budget = rng.randint(1, max(1, len(edges) // 3))
    for e in edges:
        if budget == 0:
            break
        trial = kept - {e}
        if is_connected(Graph(g.n, trial)):
            kept = trial
            budget -= 1
    return Graph(g.n, kept)


def gen_outerplanar(spec: GenSpec, retries: int = 200) -> Graph:
    """Seeded random outerplanar graph meeting the degree and girth constraints.

    2-connected graphs are a polygon plus random non-crossing chords inside
    faces; otherwise random edges of such a graph are deleted while keeping
    it connected.
    """
    spec.check()
    from .graph import girth

    rng = random.Random(spec.seed)
    for _ in range(retries):
        g = _one(spec, rng)
        if g.max_degree > spec.delta_max or girth(g) < spec.girth_min:
            continue
        if spec.min_delta is not None and g.max_degree < spec.min_delta:
            continue
        return g
    raise Infeasible(f"no graph found for {spec} after {retries} tries")


# --- enumeration ------------------------------------------------------------


def _children(g: Graph, connected: bool, max_degree: Optional[int]) -> Iterator[Graph]:
    n = g.n
    open_vertices = [v for v in range(n) if max_degree is None or g.degree(v) < max_degree]
    for mask in range(1 << len(open_vertices)):
        nbrs = [open_vertices[i] for i in range(len(open_vertices)) if (mask >> i) & 1]
        if connected and n > 0 and not nbrs:
            continue
        if max_degree is not None and len(nbrs) > max_degree:
            continue
        yield Graph(n + 1, list(g.edges) + [(v, n) for v in nbrs])


def enumerate_graphs(
    n: int,
    filter: Optional[Callable[[Graph], bool]] = None,
    connected: bool = False,
    max_degree: Optional[int] = None,
) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, in canonical form.

    Graphs are grown one vertex at a time and deduplicated by canonical form.
    ``connected`` and ``max_degree`` prune during growth (every connected
    graph has a vertex whose removal keeps it connected, and degree bounds
    survive vertex deletion); ``filter`` is only applied to the output.
    """
    if n > 10:
        raise ValueError("enumeration is limited to n <= 10")
    if n < 0:
        raise ValueError("n must be non-negative")
    level: dict = {canonical_labeling(Graph(0))[0]: Graph(0)}
    for size in range(1, n + 1):
        nxt: dict = {}
        for g in level.values():
            for child in _children(g, connected, max_degree):
                key = canonical_labeling(child)[0]
                if key not in nxt:
                    nxt[key] = canonical_form(child)
        level = nxt
    for key in sorted(level):
        g = level[key]
        if filter is None or filter(g):
            yield g


def enumerate_up_to(n: int, **kwargs) -> Iterator[Graph]:
    for size in range(1, n + 1):
        yield from enumerate_graphs(size, **kwargs)
