"""Simple graphs, incidences and the fractional-power transforms.

Vertices are the integers ``0..n-1``.  An incidence ``(v, {v, u})`` is stored
as the ordered pair ``Incidence(v, u)``; since graphs are simple the edge is
recoverable from the pair.  The colored elements of a graph are its vertices
(plain ``int``) together with its incidences.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Union


class Incidence(NamedTuple):
    vertex: int
    other: int

    def __repr__(self) -> str:
        return f"({self.vertex},{self.other})"


Element = Union[int, Incidence]
Adjacency = Mapping[int, Iterable[int]]


def element_key(x: Element) -> tuple:
    """Total order on elements: vertices first, then incidences lexicographically."""
    if isinstance(x, Incidence):
        return (1, x.vertex, x.other)
    return (0, x)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge {key[0]}-{key[1]}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)

    @classmethod
    def from_adjacency(cls, adj: Adjacency) -> tuple["Graph", list[int]]:
        """Relabel an adjacency mapping with arbitrary int keys to ``0..n-1``.

        Returns the graph and the list ``labels`` with ``labels[i]`` the
        original vertex of new vertex ``i`` (sorted order).
        """
        labels = sorted(adj)
        index = {v: i for i, v in enumerate(labels)}
        edges = {(index[u], index[w]) for u in labels for w in adj[u] if u < w}
        return cls(len(labels), edges), labels

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def to_adj(self) -> dict[int, set[int]]:
        return {v: set(self.adj[v]) for v in range(self.n)}


def as_adj(g: Graph | Adjacency) -> Mapping[int, Iterable[int]]:
    """Vertex-keyed adjacency view of a graph or mapping."""
    if isinstance(g, Graph):
        return dict(enumerate(g.adj))
    return g


def max_degree(adj: Adjacency) -> int:
    return max((len(adj[v]) for v in adj), default=0)


# --- classic families -------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# --- incidences -------------------------------------------------------------


def incidences(g: Graph) -> list[Incidence]:
    """All ``2|E|`` incidences in canonical (lexicographic) order."""
    out = []
    for u, v in g.edges:
        out.append(Incidence(u, v))
        out.append(Incidence(v, u))
    out.sort()
    return out


def elements(g: Graph) -> list[Element]:
    """``V(G) ∪ I(G)`` in canonical element order."""
    return list(range(g.n)) + incidences(g)


def first_incidences(adj: Adjacency, v: int) -> list[Incidence]:
    return [Incidence(v, u) for u in adj[v]]


def second_incidences(adj: Adjacency, v: int) -> list[Incidence]:
    return [Incidence(u, v) for u in adj[v]]


def element_neighbors(adj: Adjacency, x: Element) -> Iterator[Element]:
    """Elements adjacent or incident to ``x`` (vi-simultaneous relation).

    Vertex ``v``: its neighbours, ``I_1(v)`` and ``I_2(v)``.
    Incidence ``(v, u)``: ``v``, ``u``, the rest of ``I_1(v)``, all of
    ``I_2(v)`` and all of ``I_1(u)``.
    """
    if isinstance(x, Incidence):
        v, u = x
        yield v
        yield u
        for w in adj[v]:
            if w != u:
                yield Incidence(v, w)
            yield Incidence(w, v)
        for w in adj[u]:
            yield Incidence(u, w)
    else:
        for w in adj[x]:
            yield w
            yield Incidence(x, w)
            yield Incidence(w, x)


def incidence_graph(g: Graph) -> Graph:
    """The incidence graph: incidences ``(v,e)``, ``(w,f)`` are adjacent when
    ``v == w``, ``e == f`` or the edge ``{v, w}`` equals ``e`` or ``f``.

    Vertex ``i`` of the result is ``incidences(g)[i]``.
    """
    inc = incidences(g)
    edges = []
    for i, (v, a) in enumerate(inc):
        e = frozenset((v, a))
        for j in range(i + 1, len(inc)):
            w, b = inc[j]
            f = frozenset((w, b))
            vw = frozenset((v, w))
            if v == w or e == f or vw == e or vw == f:
                edges.append((i, j))
    return Graph(len(inc), edges)


# --- fractional powers ------------------------------------------------------


def subdivide(g: Graph, n: int) -> Graph:
    """Replace every edge by a path of length ``n``.

    Original vertices keep their ids.  For edge ``x < y`` (the ``t``-th edge
    in sorted order) the internal vertex at distance ``s`` from ``x`` gets id
    ``g.n + t*(n-1) + (s-1)``.
    """
    if n < 1:
        raise ValueError("subdivision order must be positive")
    if n == 1:
        return Graph(g.n, g.edges)
    edges = []
    nxt = g.n
    for x, y in g.edges:
        path = [x] + list(range(nxt, nxt + n - 1)) + [y]
        nxt += n - 1
        edges.extend(zip(path, path[1:]))
    return Graph(nxt, edges)


def _bfs_dist(adj: Adjacency, src: int, limit: float = math.inf) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if dist[u] >= limit:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def power(g: Graph, m: int) -> Graph:
    """Join every pair of vertices at distance at most ``m``."""
    if m < 1:
        raise ValueError("power must be positive")
    edges = set()
    for v in range(g.n):
        for w, d in _bfs_dist(g.adj, v, m).items():
            if v < w and d >= 1:
                edges.add((v, w))
    return Graph(g.n, edges)


def fractional_power(g: Graph, m: int, n: int) -> Graph:
    return power(subdivide(g, n), m)


@dataclass(frozen=True)
class ElementMap:
    """Bijection between ``V(G) ∪ I(G)`` and the vertices of ``G^{3/3}``."""

    to_power: dict
    to_element: tuple

    def __getitem__(self, x: Element) -> int:
        return self.to_power[x]


def three_thirds_power(g: Graph) -> tuple[Graph, ElementMap]:
    """``G^{3/3}`` with the element map.

    On edge ``{x, y}`` the subdivision vertex next to ``x`` stands for the
    incidence ``(x, y)`` and the one next to ``y`` for ``(y, x)``.
    """
    sub = subdivide(g, 3)
    h = power(sub, 3)
    to_power: dict = {v: v for v in range(g.n)}
    for t, (x, y) in enumerate(g.edges):
        to_power[Incidence(x, y)] = g.n + 2 * t
        to_power[Incidence(y, x)] = g.n + 2 * t + 1
    to_element: list = [None] * h.n
    for x, i in to_power.items():
        to_element[i] = x
    return h, ElementMap(to_power, tuple(to_element))


# --- structure --------------------------------------------------------------


def girth(g: Graph | Adjacency) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    adj = as_adj(g)
    best = math.inf
    for root in adj:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def components(adj: Adjacency) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        comp = sorted(_bfs_dist(adj, s))
        seen.update(comp)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(as_adj(g))) == 1


def is_forest(g: Graph | Adjacency) -> bool:
    return girth(g) == math.inf


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridges included as ``K_2``).

    Isolated vertices belong to no block.
    """

    blocks: tuple[frozenset, ...]
    block_edges: tuple[frozenset, ...]
    cut_vertices: frozenset
    cut_edges: frozenset


def _blocks(adj: Adjacency) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected components (iterative Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out = []
    counter = 0
    for root in sorted(adj):
        if root in disc or not adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, None, iter(sorted(adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (parent, u):
                            break
                    out.append(comp)
    return out


def blocks(g: Graph | Adjacency) -> BlockDecomposition:
    adj = as_adj(g)
    raw = []
    for comp in _blocks(adj):
        es = frozenset(frozenset(e) for e in comp)
        vs = frozenset(v for e in comp for v in e)
        raw.append((tuple(sorted(vs)), vs, es))
    raw.sort(key=lambda t: t[0])
    count: dict[int, int] = {}
    for _, vs, _ in raw:
        for v in vs:
            count[v] = count.get(v, 0) + 1
    cut_edges = frozenset(next(iter(es)) for _, vs, es in raw if len(vs) == 2)
    return BlockDecomposition(
        blocks=tuple(vs for _, vs, _ in raw),
        block_edges=tuple(es for _, _, es in raw),
        cut_vertices=frozenset(v for v, c in count.items() if c >= 2),
        cut_edges=cut_edges,
    )


def is_two_connected(g: Graph | Adjacency) -> bool:
    adj = as_adj(g)
    n = len(adj)
    if n < 3:
        return False
    bd = blocks(adj)
    return len(bd.blocks) == 1 and len(bd.blocks[0]) == n


def degeneracy_order(adj: Adjacency) -> tuple[list[int], int]:
    """Smallest-last elimination order and the degeneracy.

    Repeatedly removes a vertex of minimum remaining degree (ties: smallest
    id).  Returns the removal order and the largest degree seen at removal.
    """
    deg = {v: len(adj[v]) for v in adj}
    alive = set(adj)
    order = []
    k = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        order.append(v)
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return order, k
