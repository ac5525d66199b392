"""Shared machinery for the constructive colorers.

Colorings here are plain dicts ``Element -> color`` over graphs given as
adjacency mappings with arbitrary integer vertex ids, so that reduced
graphs can keep the ids of the original.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from ..checker import ViColoring
from ..graph import Adjacency, Element, Graph, Incidence, element_key, element_neighbors


class ConstructionError(RuntimeError):
    """A constructive step could not be completed, even with local search."""


class SpreadViolation(ValueError):
    pass


@dataclass
class Trace:
    """Record of the reduction steps and which extension route succeeded."""

    steps: list = field(default_factory=list)

    def add(self, kind: str, **info) -> None:
        self.steps.append({"step": kind, **info})

    def routes(self) -> dict:
        out: dict = {}
        for s in self.steps:
            r = s.get("route")
            if r is not None:
                out[r] = out.get(r, 0) + 1
        return out


def adj_copy(adj: Adjacency) -> dict[int, set[int]]:
    return {v: set(adj[v]) for v in adj}


def graph_adj(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.adj[v]) for v in range(g.n)}


def delta(adj: Adjacency) -> int:
    return max((len(adj[v]) for v in adj), default=0)


def elements_of(adj: Adjacency) -> list[Element]:
    out: list[Element] = []
    for v in sorted(adj):
        out.append(v)
        out.extend(Incidence(v, u) for u in sorted(adj[v]))
    return out


def restrict(colors: Mapping, adj: Adjacency) -> dict:
    out = {}
    for v in adj:
        out[v] = colors[v]
        for u in adj[v]:
            out[Incidence(v, u)] = colors[Incidence(v, u)]
    return out


def to_vi(colors: Mapping) -> ViColoring:
    return ViColoring(dict(colors))


def i2_colors(adj: Adjacency, colors: Mapping, v: int) -> set[int]:
    return {colors[Incidence(u, v)] for u in adj[v] if Incidence(u, v) in colors}


def conflicts(adj: Adjacency, colors: Mapping, elems: Iterable[Element], k: int, s: Optional[int]) -> list:
    """Violations involving ``elems`` (colored ones only), plus budget and spread breaches."""
    bad = []
    touched = set()
    for x in elems:
        if x not in colors:
            continue
        cx = colors[x]
        if not 1 <= cx <= k:
            bad.append((x, None, "range"))
        for y in element_neighbors(adj, x):
            if colors.get(y) == cx:
                bad.append((x, y, "clash"))
        if isinstance(x, Incidence):
            touched.add(x.other)
    if s is not None:
        for v in touched:
            if len(i2_colors(adj, colors, v)) > s:
                bad.append((v, None, "spread"))
    return bad


def complete(
    adj: Adjacency,
    colors: Mapping,
    free: Sequence[Element],
    k: int,
    s: Optional[int],
    recolor: Sequence[Element] = (),
    node_limit: int = 200_000,
) -> Optional[dict]:
    """Color ``free`` (and re-color ``recolor``) keeping everything else fixed.

    Exhaustive backtracking, most-constrained element first, smallest color
    first.  Returns a new dict or None when no completion exists (or the
    node budget runs out).
    """
    work = dict(colors)
    todo = list(dict.fromkeys(list(free) + list(recolor)))
    for x in todo:
        work.pop(x, None)
    if not todo:
        return work
    nbrs = {x: list(element_neighbors(adj, x)) for x in todo}
    # current multiset of colors on each I_2 group
    group_count: dict[int, dict[int, int]] = {}

    def group_add(v: int, c: int, d: int) -> None:
        cnt = group_count.setdefault(v, {})
        cnt[c] = cnt.get(c, 0) + d
        if cnt[c] == 0:
            del cnt[c]

    if s is not None:
        for x in todo:
            if isinstance(x, Incidence) and x.other not in group_count:
                v = x.other
                group_count[v] = {}
                for u in adj[v]:
                    c = work.get(Incidence(u, v))
                    if c is not None:
                        group_add(v, c, 1)

    def legal(x: Element) -> list[int]:
        used = {work[y] for y in nbrs[x] if y in work}
        cands = [c for c in range(1, k + 1) if c not in used]
        if s is not None and isinstance(x, Incidence):
            cnt = group_count[x.other]
            if len(cnt) >= s:
                cands = [c for c in cands if c in cnt]
        return cands

    nodes = [0]
    pending = set(todo)

    def search() -> bool:
        nodes[0] += 1
        if nodes[0] > node_limit:
            return False
        if not pending:
            return True
        best, best_c = None, None
        for x in sorted(pending, key=element_key):
            cands = legal(x)
            if best_c is None or len(cands) < len(best_c):
                best, best_c = x, cands
                if not cands:
                    return False
        pending.discard(best)
        for c in best_c:
            work[best] = c
            if s is not None and isinstance(best, Incidence):
                group_add(best.other, c, 1)
            if search():
                return True
            if s is not None and isinstance(best, Incidence):
                group_add(best.other, c, -1)
            del work[best]
        pending.add(best)
        return False

    return work if search() else None


def greedy_steps(
    adj: Adjacency,
    colors: dict,
    steps: Sequence[tuple],
    k: int,
    s: Optional[int],
) -> bool:
    """Apply ``(element, palette)`` steps in order; palette None means ``1..k``.

    A palette may also be a callable receiving the colors so far, for steps
    that copy (or must avoid) a color chosen earlier in the same extension.

    Each element gets the smallest color of its palette that clashes with
    nothing colored so far and keeps the spread cap.  Stops (returning
    False) at the first element with no such color; ``colors`` is then
    partially extended and should be discarded by the caller.
    """
    for x, palette in steps:
        if callable(palette):
            palette = palette(colors)
        cands = range(1, k + 1) if palette is None else sorted(set(palette))
        used = {colors[y] for y in element_neighbors(adj, x) if y in colors}
        group = i2_colors(adj, colors, x.other) if (s is not None and isinstance(x, Incidence)) else set()
        chosen = None
        for c in cands:
            if c in used or not 1 <= c <= k:
                continue
            if s is not None and isinstance(x, Incidence) and c not in group and len(group) >= s:
                continue
            chosen = c
            break
        if chosen is None:
            return False
        colors[x] = chosen
    return True


def new_elements(adj: Adjacency, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> list[Element]:
    out: list[Element] = list(vertices)
    for a, b in edges:
        out.append(Incidence(a, b))
        out.append(Incidence(b, a))
    return out


def neighbourhood(adj: Adjacency, centres: Iterable[int]) -> list[Element]:
    """Vertices ``centres`` and every incidence touching them."""
    out: list[Element] = []
    for v in centres:
        out.append(v)
        for u in adj[v]:
            out.append(Incidence(v, u))
            out.append(Incidence(u, v))
    return list(dict.fromkeys(out))


def extend_with_fallback(
    adj: Adjacency,
    colors: dict,
    prescribed: Sequence[tuple],
    new: Sequence[Element],
    k: int,
    s: Optional[int],
    trace: Optional[Trace],
    case: str,
    widen: Sequence[int] = (),
    recolor: Sequence[Element] = (),
    **info,
) -> dict:
    """Run the prescribed steps; fall back to local completion when they fail.

    Routes, in order: ``prescribed`` (steps as written), ``local`` (exhaustive
    completion of the new elements), ``local+recolor`` (also re-coloring the
    elements around the vertices in ``widen``).  Elements in ``recolor`` are
    uncolored first and count as new on every route.
    """
    if recolor:
        colors = {x: c for x, c in colors.items() if x not in set(recolor)}
        new = list(new) + [x for x in recolor if x not in new]
    attempt = dict(colors)
    if greedy_steps(adj, attempt, prescribed, k, s):
        left = [x for x in new if x not in attempt]
        done = complete(adj, attempt, left, k, s) if left else attempt
        if done is not None and not conflicts(adj, done, new, k, s):
            if trace is not None:
                trace.add(case, route="prescribed", **info)
            return done
    done = complete(adj, colors, new, k, s)
    if done is not None:
        if trace is not None:
            trace.add(case, route="local", **info)
        return done
    if widen:
        extra = [x for x in neighbourhood(adj, widen) if x not in new]
        done = complete(adj, colors, new, k, s, recolor=extra)
        if done is not None:
            if trace is not None:
                trace.add(case, route="local+recolor", **info)
            return done
    raise ConstructionError(f"{case}: cannot extend with {k} colors (spread cap {s}) at {info}")
