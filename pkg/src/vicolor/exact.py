"""Exact branch-and-bound search for vi-simultaneous colorings.

The engine colors an abstract conflict graph given as neighbour lists, with
optional *groups* of variables whose combined number of distinct colors is
capped (this is how the spread bound on ``I_2(v)`` is enforced).  Colors are
bit positions ``0..k-1`` internally and ``1..k`` outside.

Branching is DSATUR-like: the uncolored variable with the fewest legal
colors goes first.  Color symmetry is broken by only ever opening the
smallest unused color, on top of a pre-colored clique.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .checker import ViColoring, lower_bound
from .graph import Graph, Incidence, as_adj, element_neighbors, elements, three_thirds_power


class NodeLimit(RuntimeError):
    """The search stopped at its node budget without a decision."""

    def __init__(self, nodes: int, k: int):
        super().__init__(f"node limit reached after {nodes} nodes (k={k})")
        self.nodes = nodes
        self.k = k


@dataclass
class SearchConfig:
    max_colors: int
    spread_cap: Optional[int] = None
    node_limit: Optional[int] = None
    seed: int = 0


@dataclass
class SearchResult:
    status: str  # "sat" | "unsat" | "limit"
    k: int
    witness: Optional[ViColoring] = None
    nodes: int = 0

    @property
    def sat(self) -> bool:
        return self.status == "sat"

    @property
    def unsat(self) -> bool:
        return self.status == "unsat"


def default_node_limit() -> Optional[int]:
    raw = os.environ.get("VIC_NODE_LIMIT")
    if raw is None or raw.strip() == "":
        return None
    value = int(raw)
    return value if value > 0 else None


class _Abort(Exception):
    pass


class _Engine:
    def __init__(
        self,
        nbrs: Sequence[Sequence[int]],
        k: int,
        group_of: Optional[Sequence[int]] = None,
        cap: Optional[int] = None,
        node_limit: Optional[int] = None,
    ):
        self.n = len(nbrs)
        self.nbrs = [list(a) for a in nbrs]
        self.k = k
        self.full = (1 << k) - 1
        self.color = [-1] * self.n
        self.forb = [[0] * k for _ in range(self.n)]
        self.avail = [self.full] * self.n
        self.used = [0] * k
        self.group_of = list(group_of) if group_of is not None and cap is not None else None
        self.cap = cap
        ngroups = (max(self.group_of) + 1) if self.group_of else 0
        ngroups = max(ngroups, 0)
        self.gcnt = [[0] * k for _ in range(ngroups)]
        self.gmask = [0] * ngroups
        self.node_limit = node_limit
        self.nodes = 0

    def _legal(self, i: int) -> int:
        m = self.avail[i]
        if self.group_of is not None:
            g = self.group_of[i]
            if g >= 0 and bin(self.gmask[g]).count("1") >= self.cap:
                m &= self.gmask[g]
        return m

    def assign(self, i: int, c: int) -> None:
        self.color[i] = c
        self.used[c] += 1
        bit = 1 << c
        for j in self.nbrs[i]:
            f = self.forb[j]
            f[c] += 1
            if f[c] == 1:
                self.avail[j] &= ~bit
        if self.group_of is not None:
            g = self.group_of[i]
            if g >= 0:
                self.gcnt[g][c] += 1
                self.gmask[g] |= bit

    def unassign(self, i: int) -> None:
        c = self.color[i]
        self.color[i] = -1
        self.used[c] -= 1
        bit = 1 << c
        for j in self.nbrs[i]:
            f = self.forb[j]
            f[c] -= 1
            if f[c] == 0:
                self.avail[j] |= bit
        if self.group_of is not None:
            g = self.group_of[i]
            if g >= 0:
                self.gcnt[g][c] -= 1
                if self.gcnt[g][c] == 0:
                    self.gmask[g] &= ~bit

    def _pick(self):
        best = -1
        best_mask = 0
        best_key = None
        color = self.color
        for i in range(self.n):
            if color[i] >= 0:
                continue
            m = self._legal(i)
            if m == 0:
                return i, 0
            key = (bin(m).count("1"), -len(self.nbrs[i]))
            if best_key is None or key < best_key:
                best, best_mask, best_key = i, m, key
        return best, best_mask

    def solve(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Abort
        i, m = self._pick()
        if i < 0:
            return True
        if m == 0:
            return False
        # only the smallest never-used color is worth opening
        opened = False
        for c in range(self.k):
            if not (m >> c) & 1:
                continue
            if self.used[c] == 0:
                if opened:
                    continue
                opened = True
            self.assign(i, c)
            if self.solve():
                return True
            self.unassign(i)
        return False


def _run(engine: _Engine, precolor: dict) -> str:
    for i, c in precolor.items():
        if c >= engine.k or not (engine._legal(i) >> c) & 1:
            return "unsat"
        engine.assign(i, c)
    try:
        return "sat" if engine.solve() else "unsat"
    except _Abort:
        return "limit"


# --- vi-simultaneous search -------------------------------------------------


class _ElementIndex:
    def __init__(self, g: Graph):
        self.elems = elements(g)
        self.index = {x: i for i, x in enumerate(self.elems)}
        adj = as_adj(g)
        self.nbrs = [sorted({self.index[y] for y in element_neighbors(adj, x)}) for x in self.elems]
        # incidence (u, v) lies in I_2(v)
        self.group_of = [x.other if isinstance(x, Incidence) else -1 for x in self.elems]


def _seed_clique(g: Graph) -> list:
    """``I_1[v] ∪ {(u, v)}`` for the smallest max-degree ``v`` and its smallest neighbour ``u``."""
    if g.m == 0:
        return []
    delta = g.max_degree
    v = min(x for x in range(g.n) if g.degree(x) == delta)
    u = g.adj[v][0]
    return [v] + [Incidence(v, w) for w in g.adj[v]] + [Incidence(u, v)]


def is_colorable(
    g: Graph,
    k: int,
    s: Optional[int] = None,
    node_limit: Optional[int] = None,
) -> SearchResult:
    """Decide whether ``g`` has a vi-simultaneous ``k``-coloring with spread ``<= s``."""
    if k < 1:
        raise ValueError("k must be positive")
    if s is not None and s < 1:
        raise ValueError("spread cap must be positive")
    if g.n == 0:
        return SearchResult("sat", k, ViColoring({}), 0)
    idx = _ElementIndex(g)
    engine = _Engine(idx.nbrs, k, idx.group_of, s, node_limit)
    clique = _seed_clique(g)
    if len(clique) > k:
        return SearchResult("unsat", k, None, 0)
    precolor = {idx.index[x]: c for c, x in enumerate(clique)}
    status = _run(engine, precolor)
    witness = None
    if status == "sat":
        witness = ViColoring({x: engine.color[i] + 1 for i, x in enumerate(idx.elems)})
    return SearchResult(status, k, witness, engine.nodes)


def chi_vi(
    g: Graph,
    s: Optional[int] = None,
    node_limit: Optional[int] = None,
    max_k: Optional[int] = None,
) -> tuple[int, ViColoring]:
    """Smallest ``k`` with a (k, s)-coloring, scanning upward from ``Δ+2``.

    ``node_limit`` applies to each decision separately.
    """
    k = lower_bound(g)
    while True:
        if max_k is not None and k > max_k:
            raise NodeLimit(0, k)
        res = is_colorable(g, k, s, node_limit)
        if res.sat:
            return k, res.witness
        if res.status == "limit":
            raise NodeLimit(res.nodes, k)
        k += 1


# --- plain chromatic number -------------------------------------------------


def _greedy_clique(nbrs: Sequence[Sequence[int]]) -> list[int]:
    n = len(nbrs)
    if n == 0:
        return []
    sets = [set(a) for a in nbrs]
    best: list[int] = []
    for start in sorted(range(n), key=lambda v: -len(sets[v]))[: min(n, 8)]:
        clique = [start]
        cand = set(sets[start])
        while cand:
            v = max(cand, key=lambda x: (len(sets[x] & cand), -x))
            clique.append(v)
            cand &= sets[v]
        if len(clique) > len(best):
            best = clique
    return best


def color_graph(g: Graph, k: int, node_limit: Optional[int] = None) -> SearchResult:
    """Plain proper ``k``-coloring of ``g``; the witness maps vertex -> color."""
    nbrs = [list(a) for a in g.adj]
    engine = _Engine(nbrs, k, node_limit=node_limit)
    clique = _greedy_clique(nbrs)
    if len(clique) > k:
        return SearchResult("unsat", k, None, 0)
    status = _run(engine, {v: c for c, v in enumerate(clique)})
    witness = None
    if status == "sat":
        witness = ViColoring({v: engine.color[v] + 1 for v in range(g.n)})
    return SearchResult(status, k, witness, engine.nodes)


class _DsaturBnB:
    """Optimising DSATUR branch and bound for the plain chromatic number.

    Deliberately separate from ``_Engine``: it minimises directly against an
    incumbent instead of deciding one ``k`` at a time, so the power-graph
    route shares no search code with the element-level route.
    """

    def __init__(self, nbrs: Sequence[Sequence[int]], node_limit: Optional[int]):
        self.nbrs = [tuple(a) for a in nbrs]
        self.n = len(nbrs)
        self.node_limit = node_limit
        self.nodes = 0
        self.color = [-1] * self.n
        # count[v][c]: coloured neighbours of v holding colour c
        self.count = [[0] * (self.n + 1) for _ in range(self.n)]
        self.sat = [0] * self.n
        self.free_deg = [len(a) for a in self.nbrs]  # uncoloured neighbours
        self.best = self.n + 1
        self.best_colors: list[int] = []

    def _greedy(self) -> None:
        order_color = [-1] * self.n
        sat = [set() for _ in range(self.n)]
        for _ in range(self.n):
            v = max(
                (x for x in range(self.n) if order_color[x] < 0),
                key=lambda x: (len(sat[x]), len(self.nbrs[x]), -x),
            )
            c = next(c for c in range(self.n) if c not in sat[v])
            order_color[v] = c
            for w in self.nbrs[v]:
                sat[w].add(c)
        self.best = max(order_color, default=-1) + 1
        self.best_colors = order_color

    def _set(self, v: int, c: int) -> None:
        self.color[v] = c
        count, sat, free = self.count, self.sat, self.free_deg
        for w in self.nbrs[v]:
            if count[w][c] == 0:
                sat[w] += 1
            count[w][c] += 1
            free[w] -= 1

    def _unset(self, v: int, c: int) -> None:
        self.color[v] = -1
        count, sat, free = self.count, self.sat, self.free_deg
        for w in self.nbrs[v]:
            count[w][c] -= 1
            if count[w][c] == 0:
                sat[w] -= 1
            free[w] += 1

    def _pick(self) -> int:
        best, best_key = -1, (-1, -1)
        color, sat, free = self.color, self.sat, self.free_deg
        for x in range(self.n):
            if color[x] < 0:
                key = (sat[x], free[x])
                if key > best_key:
                    best, best_key = x, key
        return best

    def _search(self, colored: int, used: int, lower: int) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise NodeLimit(self.nodes, self.best)
        if colored == self.n:
            self.best = used
            self.best_colors = list(self.color)
            return used <= lower
        v = self._pick()
        # a new colour is only worth opening if it still beats the incumbent
        top = min(used + 1, self.best - 1)
        for c in range(top):
            if self.count[v][c]:
                continue
            self._set(v, c)
            done = self._search(colored + 1, max(used, c + 1), lower)
            self._unset(v, c)
            if done:
                return True
            top = min(top, self.best - 1)
        return False

    def solve(self, lower: int) -> tuple[int, list[int]]:
        if self.n == 0:
            return 0, []
        self._greedy()
        if self.best > lower:
            self._search(0, 0, lower)
        return self.best, self.best_colors


def chromatic_number(g: Graph, node_limit: Optional[int] = None) -> tuple[int, dict]:
    """``χ(g)`` and an optimal coloring ``vertex -> 1..χ``."""
    nbrs = [list(a) for a in g.adj]
    lower = len(_greedy_clique(nbrs))
    k, colors = _DsaturBnB(nbrs, node_limit).solve(lower)
    return k, {v: c + 1 for v, c in enumerate(colors)}


def chi_of_power(g: Graph, node_limit: Optional[int] = None) -> int:
    """Chromatic number of an arbitrary graph (typically a path or cycle power)."""
    return chromatic_number(g, node_limit)[0]


def chi_vi_via_power(g: Graph, node_limit: Optional[int] = None) -> int:
    """``χ(G^{3/3})`` computed as a plain coloring problem."""
    h, _ = three_thirds_power(g)
    return chi_of_power(h, node_limit)
