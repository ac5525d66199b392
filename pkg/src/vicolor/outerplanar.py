"""Outerplanarity testing, outer cycles, faces, end faces and reductions.

A 2-connected outerplanar graph has a unique Hamiltonian outer cycle.  We
find it by repeatedly removing a 2-vertex ``v`` (joining its neighbours if
needed) and then re-inserting the removed vertices in reverse order; each
``v`` must land between its two neighbours, which must be consecutive.  The
result is double-checked: cycle edges must exist and the remaining edges
(chords) must be pairwise non-crossing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .graph import Adjacency, Graph, as_adj, blocks


class NotOuterplanar(ValueError):
    pass


@dataclass(frozen=True)
class EndFace:
    """Face ``[v_i, ..., v_j]`` whose interior vertices all have degree 2."""

    boundary: tuple

    @property
    def degree(self) -> int:
        return len(self.boundary)

    @property
    def ends(self) -> tuple[int, int]:
        return self.boundary[0], self.boundary[-1]

    @property
    def interior(self) -> tuple:
        return self.boundary[1:-1]

    def reversed(self) -> "EndFace":
        return EndFace(tuple(reversed(self.boundary)))


@dataclass(frozen=True)
class OuterplanarEmbedding:
    outer_order: tuple  # first-visit order of the outer walk; the outer cycle when 2-connected
    outer_walk: tuple  # closed boundary walk of the outer face (vertices may repeat)
    cycles: tuple  # outer cycle of every 2-connected block
    chords: frozenset  # edges (u, v), u < v, that are not on the outer boundary
    faces: tuple  # inner faces as vertex sequences


@dataclass(frozen=True)
class PendantVertex:
    v: int
    u: int  # the neighbour


@dataclass(frozen=True)
class AdjacentTwoVertices:
    v: int
    u: int
    x: int  # other neighbour of v
    y: int  # other neighbour of u


@dataclass(frozen=True)
class TriangulatedTwoVertex:
    v: int
    u: int
    w: int


ReductionCase = Union[PendantVertex, AdjacentTwoVertices, TriangulatedTwoVertex]


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def outer_cycle(vertices, edges) -> Optional[list[int]]:
    """Hamiltonian outer cycle of a 2-connected graph, or None if not outerplanar."""
    vertices = sorted(vertices)
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    n = len(vertices)
    if n < 3 or sum(len(a) for a in adj.values()) // 2 > 2 * n - 3:
        return None
    work = {v: set(a) for v, a in adj.items()}
    removed: list[tuple[int, int, int]] = []
    queue = sorted(v for v in vertices if len(work[v]) == 2)
    while len(work) > 3:
        while queue and (queue[-1] not in work or len(work[queue[-1]]) != 2):
            queue.pop()
        if not queue:
            return None
        v = queue.pop()
        u, w = sorted(work[v])
        del work[v]
        work[u].discard(v)
        work[w].discard(v)
        if w not in work[u]:
            work[u].add(w)
            work[w].add(u)
        removed.append((v, u, w))
        for x in (u, w):
            if len(work[x]) == 2:
                queue.append(x)
            elif len(work[x]) < 2:
                return None
    a, b, c = sorted(work)
    if not (b in work[a] and c in work[a] and c in work[b]):
        return None
    nxt = {a: b, b: c, c: a}
    for v, u, w in reversed(removed):
        if nxt[u] == w:
            nxt[u], nxt[v] = v, w
        elif nxt[w] == u:
            nxt[w], nxt[v] = v, u
        else:
            return None
    start = vertices[0]
    cycle = [start]
    while nxt[cycle[-1]] != start:
        cycle.append(nxt[cycle[-1]])
    if len(cycle) != n:
        return None
    if not all(cycle[(i + 1) % n] in adj[cycle[i]] for i in range(n)):
        return None
    pos = {v: i for i, v in enumerate(cycle)}
    ring = {_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)}
    spans = sorted(
        (min(pos[u], pos[v]), -max(pos[u], pos[v]))
        for u in adj
        for v in adj[u]
        if u < v and _edge(u, v) not in ring
    )
    stack: list[int] = []
    for lo, neg_hi in spans:
        hi = -neg_hi
        while stack and stack[-1] <= lo:
            stack.pop()
        if stack and hi > stack[-1]:
            return None
        stack.append(hi)
    # orient so the smaller neighbour of the start comes second
    if n > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def cycle_faces(cycle: list[int], adj: Adjacency) -> list[tuple]:
    """Inner faces of a 2-connected outerplanar graph with outer cycle ``cycle``.

    Every inner face has a unique outermost ("top") edge: a chord, or the
    closing edge of the cycle for the face that touches it.  The face under
    top edge ``(a, b)`` is traced from ``a`` by always jumping to the farthest
    neighbour not beyond ``b``.
    """
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    nbr_pos = {i: sorted(pos[w] for w in adj[cycle[i]] if w in pos) for i in range(n)}
    tops = [(0, n - 1)]
    for i in range(n):
        for j in nbr_pos[i]:
            if i < j and j - i >= 2 and not (i == 0 and j == n - 1):
                tops.append((i, j))
    faces = []
    for a, b in sorted(tops):
        walk = [a]
        cur = a
        while cur != b:
            step = max(p for p in nbr_pos[cur] if cur < p <= b and not (cur == a and p == b))
            walk.append(step)
            cur = step
        faces.append(tuple(cycle[p] for p in walk))
    return faces


def _outer_walk(adj: Adjacency, cycles: list[list[int]], bridges: list[tuple[int, int]]) -> list[int]:
    # blocks incident to each vertex, as ("cycle", index) or ("bridge", index)
    at: dict[int, list] = {v: [] for v in adj}
    for i, cyc in enumerate(cycles):
        for v in cyc:
            at[v].append(("cycle", i))
    for i, (u, v) in enumerate(bridges):
        at[u].append(("bridge", i))
        at[v].append(("bridge", i))
    for v in at:
        at[v].sort()
    used: set = set()
    walk: list[int] = []

    def visit(v: int) -> None:
        for blk in at[v]:
            if blk in used:
                continue
            used.add(blk)
            kind, i = blk
            if kind == "bridge":
                u = bridges[i][0] if bridges[i][1] == v else bridges[i][1]
                walk.append(u)
                visit(u)
                walk.append(v)
            else:
                cyc = cycles[i]
                k = cyc.index(v)
                for step in range(1, len(cyc)):
                    u = cyc[(k + step) % len(cyc)]
                    walk.append(u)
                    visit(u)
                walk.append(v)

    seen: set = set()
    for root in sorted(adj):
        if root in seen:
            continue
        start = len(walk)
        walk.append(root)
        visit(root)
        if len(walk) - start > 1 and walk[-1] == root:
            walk.pop()
        seen.update(walk[start:])
    return walk


def is_outerplanar(g: Union[Graph, Adjacency]) -> Optional[OuterplanarEmbedding]:
    """Embedding of ``g`` if it is outerplanar, otherwise None."""
    adj = as_adj(g)
    n = len(adj)
    m = sum(len(adj[v]) for v in adj) // 2
    if n >= 2 and m > 2 * n - 3:
        return None
    bd = blocks(adj)
    cycles: list[list[int]] = []
    bridges: list[tuple[int, int]] = []
    chords: set = set()
    faces: list[tuple] = []
    for vs, es in zip(bd.blocks, bd.block_edges):
        if len(vs) == 2:
            bridges.append(tuple(sorted(vs)))
            continue
        edges = [tuple(e) for e in es]
        cyc = outer_cycle(vs, edges)
        if cyc is None:
            return None
        cycles.append(cyc)
        ring = {_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
        chords.update(_edge(*e) for e in edges if _edge(*e) not in ring)
        sub = {v: [w for w in adj[v] if w in vs and frozenset((v, w)) in es] for v in vs}
        faces.extend(cycle_faces(cyc, sub))
    walk = _outer_walk(adj, cycles, bridges)
    order = list(dict.fromkeys(walk))
    return OuterplanarEmbedding(
        outer_order=tuple(order),
        outer_walk=tuple(walk),
        cycles=tuple(tuple(c) for c in cycles),
        chords=frozenset(chords),
        faces=tuple(faces),
    )


def embed(g: Union[Graph, Adjacency]) -> OuterplanarEmbedding:
    emb = is_outerplanar(g)
    if emb is None:
        raise NotOuterplanar("graph is not outerplanar")
    return emb


def _end_faces(faces, chords, adj: Adjacency) -> list[EndFace]:
    out = []
    for face in faces:
        k = len(face)
        chord_at = [i for i in range(k) if _edge(face[i], face[(i + 1) % k]) in chords]
        if len(chord_at) != 1:
            continue
        i = chord_at[0]
        path = face[i + 1 :] + face[: i + 1]
        if path[0] > path[-1]:
            path = tuple(reversed(path))
        if all(len(adj[v]) == 2 for v in path[1:-1]):
            out.append(EndFace(tuple(path)))
    out.sort(key=lambda f: (min(f.boundary), f.boundary))
    return out


def end_faces(emb: OuterplanarEmbedding, g: Union[Graph, Adjacency]) -> list[EndFace]:
    """Faces with exactly one chord on their boundary, as paths between the chord ends.

    A chordless cycle has none.  Sorted by smallest vertex id, then boundary.
    Boundaries run from the smaller chord end to the larger one.
    """
    return _end_faces(emb.faces, emb.chords, as_adj(g))


def block_end_faces(cycle: list[int], adj: Adjacency) -> list[EndFace]:
    """End faces of a 2-connected outerplanar graph whose outer cycle is already known."""
    n = len(cycle)
    ring = {_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)}
    chords = {_edge(u, w) for u in adj for w in adj[u] if u < w and _edge(u, w) not in ring}
    return _end_faces(cycle_faces(cycle, adj), chords, adj)


def low_degree_end_face(
    emb: OuterplanarEmbedding, g: Union[Graph, Adjacency], min_degree: int = 3
) -> EndFace:
    """First end face (of length at least ``min_degree``) with an end of degree below 5.

    The returned face is oriented so that its first vertex has the smaller degree.
    """
    adj = as_adj(g)
    for face in end_faces(emb, adj):
        if face.degree < min_degree:
            continue
        a, b = face.ends
        if len(adj[a]) < 5 or len(adj[b]) < 5:
            return face if len(adj[a]) <= len(adj[b]) else face.reversed()
    raise NotOuterplanar("no end face with an end of degree below 5")


def find_reduction(g: Union[Graph, Adjacency]) -> ReductionCase:
    """A pendant vertex, two adjacent 2-vertices, or a 2-vertex with adjacent neighbours.

    Checked in that order, each time taking the smallest vertex ids.
    """
    adj = as_adj(g)
    for v in sorted(adj):
        if len(adj[v]) == 1:
            return PendantVertex(v, next(iter(adj[v])))
    twos = sorted(v for v in adj if len(adj[v]) == 2)
    two_set = set(twos)
    for v in twos:
        for u in sorted(adj[v]):
            if u in two_set and u > v:
                (x,) = [w for w in adj[v] if w != u]
                (y,) = [w for w in adj[u] if w != v]
                return AdjacentTwoVertices(v, u, x, y)
    for v in twos:
        u, w = sorted(adj[v])
        if w in adj[u]:
            return TriangulatedTwoVertex(v, u, w)
    raise NotOuterplanar("no reducible configuration; graph is empty or not outerplanar")


def is_outerplanar_graph(g: Union[Graph, Mapping]) -> bool:
    return is_outerplanar(g) is not None
