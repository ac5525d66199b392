"""Closed-form colorers for paths, cycles, forests and complete graphs."""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Optional

from ..checker import ViColoring
from ..graph import Adjacency, Graph, Incidence, cycle_graph, is_forest
from .common import graph_adj


class CyclicInput(ValueError):
    pass


# --- cycles -----------------------------------------------------------------
#
# Around a cycle v_0 .. v_{n-1} list the elements as
#   v_i, (v_i, v_{i+1}), (v_{i+1}, v_i), v_{i+1}, ...
# Two elements are related exactly when they are at most 3 apart in this
# cyclic sequence of length 3n, and I_2(v_i) sits at positions 3i-2, 3i+2.
# So a coloring is a cyclic word with any 4 consecutive letters distinct, and
# spread 1 means letters 4 apart agree at every position 3i-2.


def _word_ok(word: tuple, s: int) -> bool:
    L = len(word)
    for p in range(L):
        window = {word[(p + d) % L] for d in range(4)}
        if len(window) < 4:
            return False
    if s == 1:
        for p in range(1, L, 3):
            if word[p] != word[(p + 4) % L]:
                return False
    return True


@lru_cache(maxsize=None)
def _search_word(n: int, k: int, s: int) -> Optional[tuple]:
    """Cyclic word for C_n starting with 1,2,3,4 (when k >= 4), by backtracking."""
    L = 3 * n
    word = [0] * L
    start = min(4, k)
    for i in range(start):
        word[i] = i + 1

    def ok_at(p: int) -> bool:
        c = word[p]
        if any(p - d >= 0 and word[p - d] == c for d in (1, 2, 3)):
            return False
        # spread 1 ties position q to q - 4 whenever q = 2 mod 3
        return not (s == 1 and p % 3 == 2 and p >= 4 and word[p - 4] != c)

    def go(p: int) -> bool:
        if p == L:
            return _word_ok(tuple(word), s)
        for c in range(1, k + 1):
            word[p] = c
            if ok_at(p) and go(p + 1):
                return True
        word[p] = 0
        return False

    return tuple(word) if go(start) else None


def cycle_word(n: int, s: int = 2) -> tuple:
    """Color sequence for the elements of C_n in the cyclic order above."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if n == 3:
        return _search_word(3, 6 if s == 1 else 5, s)
    if n % 4 == 0:
        return (1, 2, 3, 4) * (3 * n // 4)
    # a C_{4+r} block followed by C_4 blocks; every block starts 1,2,3,4 so
    # the junctions look like the blocks' own wrap-around
    r = n % 4
    head = _search_word(4 + r, 5, 1)
    return head + (1, 2, 3, 4) * (3 * (n - 4 - r) // 4)


def cycle_colors(order: list[int], s: int = 2) -> dict:
    """Coloring dict for the cycle visiting ``order`` (arbitrary vertex ids)."""
    n = len(order)
    word = cycle_word(n, s)
    out: dict = {}
    for i, v in enumerate(order):
        w = order[(i + 1) % n]
        out[v] = word[3 * i]
        out[Incidence(v, w)] = word[3 * i + 1]
        out[Incidence(w, v)] = word[3 * i + 2]
    return out


def color_cycle(n: int, s: int = 2) -> ViColoring:
    """Coloring of C_n with the least number of colors for spread cap ``s``.

    4 colors when 4 divides n, 6 for C_3 at spread 1, otherwise 5.
    """
    if s not in (1, 2):
        raise ValueError("spread cap must be 1 or 2")
    cycle_graph(n)  # validates n
    return ViColoring(cycle_colors(list(range(n)), s))


# --- forests ----------------------------------------------------------------


def forest_colors(adj: Adjacency) -> dict:
    """(Δ+2, 1)-coloring of a forest given by adjacency (K_2 parts get 4 colors)."""
    out: dict = {}
    seen: set = set()
    top = max((len(adj[v]) for v in adj), default=0) + 2
    for root in sorted(adj):
        if root in seen:
            continue
        seen.add(root)
        out[root] = 1
        kids = sorted(adj[root])
        for i, u in enumerate(kids):
            out[Incidence(u, root)] = 2
            out[Incidence(root, u)] = 3 + i
        queue = deque()
        for u in kids:
            seen.add(u)
            _color_child(adj, out, root, u)
            queue.append((u, root))
        while queue:
            v, p = queue.popleft()
            beta = out[Incidence(p, v)]  # the single color on I_2(v)
            blocked = {out[v], out[Incidence(v, p)], beta}
            free = (c for c in range(1, top + 1) if c not in blocked)
            for u in sorted(adj[v]):
                if u == p:
                    continue
                if u in seen:
                    raise CyclicInput("graph has a cycle")
                seen.add(u)
                out[Incidence(u, v)] = beta
                out[Incidence(v, u)] = next(free)
                _color_child(adj, out, v, u)
                queue.append((u, v))
    return out


def _color_child(adj: Adjacency, out: dict, v: int, u: int) -> None:
    blocked = {out[v], out[Incidence(v, u)], out[Incidence(u, v)]}
    out[u] = min(c for c in range(1, 5) if c not in blocked)


def color_forest(g: Graph) -> ViColoring:
    """(Δ+2, 1)-coloring of a forest, rooted BFS assignment per tree."""
    if not is_forest(g):
        raise CyclicInput("graph has a cycle")
    return ViColoring(forest_colors(graph_adj(g)))


def color_path(n: int) -> ViColoring:
    """4-coloring of P_n with spread 1 (a single vertex needs 1 color)."""
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    if n == 1:
        return ViColoring({0: 1})
    # along a path the cyclic word for 4 | n restricted to a segment still works
    word = (1, 2, 3, 4) * n
    out: dict = {}
    for i in range(n):
        out[i] = word[3 * i]
        if i + 1 < n:
            out[Incidence(i, i + 1)] = word[3 * i + 1]
            out[Incidence(i + 1, i)] = word[3 * i + 2]
    return ViColoring(out)


# --- complete graphs --------------------------------------------------------


def _complete_even(n: int) -> dict:
    # vertex i gets i; (i, j) gets j+1 mod n except (i, i-1), which takes a
    # spare color alternating with the parity of i (so n must be even)
    spare = (n, n + 1)
    out: dict = {}
    for i in range(n):
        out[i] = i
        for j in range(n):
            if j == i:
                continue
            if j == (i - 1) % n:
                out[Incidence(i, j)] = spare[i % 2]
            else:
                out[Incidence(i, j)] = (j + 1) % n
    return out


def _complete_odd(n: int) -> dict:
    # K_{n-1} as above plus vertex z: every (j, z) takes a third spare color,
    # (z, j) takes j+1 mod (n-1) and z takes the first spare
    m = n - 1
    out = _complete_even(m)
    z = m
    extra = m + 2
    out[z] = m
    for j in range(m):
        out[Incidence(j, z)] = extra
        out[Incidence(z, j)] = (j + 1) % m
    return out


def complete_colors(n: int) -> dict:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return {0: 1}
    raw = _complete_even(n) if n % 2 == 0 else _complete_odd(n)
    return {x: c + 1 for x, c in raw.items()}


def color_complete(n: int) -> ViColoring:
    """(n+2)-coloring of K_n by index arithmetic (spread at most 2)."""
    return ViColoring(complete_colors(n))

