"""Hand-transcribed colorings of small base graphs, stored as JSON data files."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import permutations
from typing import Optional

from ..canon import canonical_labeling
from ..checker import ViColoring
from ..formats import coloring_from_json
from ..graph import Adjacency, Graph, Incidence


@dataclass(frozen=True)
class Fixture:
    name: str
    source: str
    description: str
    k: int
    s: Optional[int]
    graph: Graph
    coloring: ViColoring
    drawing_labels: tuple


def _load(name: str, data: dict) -> Fixture:
    g = Graph(data["n"], [tuple(e) for e in data["edges"]])
    return Fixture(
        name=name,
        source=data["source"],
        description=data["description"],
        k=data["k"],
        s=data["s"],
        graph=g,
        coloring=coloring_from_json(data),
        drawing_labels=tuple(data.get("drawing_labels", ())),
    )


@lru_cache(maxsize=None)
def load_fixtures() -> dict[str, Fixture]:
    """All fixtures by name."""
    out = {}
    root = resources.files(__package__) / "fixtures"
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            name = entry.name[: -len(".json")]
            out[name] = _load(name, json.loads(entry.read_text()))
    return out


class FixtureTable:
    """Fixtures indexed by canonical form, optionally filtered by spread."""

    def __init__(self, fixtures: Optional[dict[str, Fixture]] = None):
        self.fixtures = dict(load_fixtures() if fixtures is None else fixtures)
        self._by_key: dict = {}
        for fx in self.fixtures.values():
            cert, order = canonical_labeling(fx.graph)
            self._by_key.setdefault((fx.graph.n, cert), []).append((fx, order))

    def __len__(self) -> int:
        return len(self.fixtures)

    def lookup(self, adj: Adjacency, max_spread: Optional[int] = None, max_colors: Optional[int] = None) -> Optional[dict]:
        """Fixture coloring carried onto ``adj`` (any vertex ids), or None."""
        g, labels = Graph.from_adjacency(adj)
        cert, order = canonical_labeling(g)
        best = None
        for fx, fx_order in self._by_key.get((g.n, cert), []):
            measured = _measured_spread(fx)
            if max_spread is not None and measured > max_spread:
                continue
            if max_colors is not None and fx.coloring.k > max_colors:
                continue
            if best is None or fx.coloring.k < best[0].coloring.k:
                best = (fx, fx_order)
        if best is None:
            return None
        fx, fx_order = best
        vmap = {fx_order[i]: labels[order[i]] for i in range(g.n)}
        return dict(fx.coloring.relabeled(vmap).colors)


def _measured_spread(fx: Fixture) -> int:
    g = fx.graph
    return max(
        (len({fx.coloring[Incidence(u, v)] for u in g.adj[v]}) for v in range(g.n)),
        default=0,
    )


def spanning_subgraph_map(small: Adjacency, big: Graph) -> Optional[dict]:
    """Vertex map sending ``small`` (same order as ``big``) into a spanning subgraph of ``big``."""
    verts = sorted(small)
    if len(verts) != big.n or big.n > 8:
        return None
    edges = [(u, w) for u in verts for w in small[u] if u < w]
    for perm in permutations(range(big.n)):
        vmap = dict(zip(verts, perm))
        if all(big.has_edge(vmap[u], vmap[w]) for u, w in edges):
            return vmap
    return None


def colors_from_supergraph(small: Adjacency, fx: Fixture) -> Optional[dict]:
    """Restrict a fixture coloring to ``small`` when it is a spanning subgraph of the fixture."""
    vmap = spanning_subgraph_map(small, fx.graph)
    if vmap is None:
        return None
    out = {}
    for v in small:
        out[v] = fx.coloring[vmap[v]]
        for u in small[v]:
            out[Incidence(v, u)] = fx.coloring[Incidence(vmap[v], vmap[u])]
    return out
