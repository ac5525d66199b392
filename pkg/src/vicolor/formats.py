"""Graph and coloring serialization: edge list, JSON, DOT."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .checker import ViColoring
from .graph import Graph, Incidence, element_key, incidences, three_thirds_power


class FormatError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v``; blanks and ``#`` comments skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict) -> Graph:
    try:
        return Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from None


def load_graph(path: Union[str, Path]) -> Graph:
    """Read a graph; ``.json`` files as JSON, everything else as an edge list."""
    text = Path(path).read_text()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edge_list(text)


def save_graph(g: Graph, path: Union[str, Path]) -> None:
    p = Path(path)
    if p.suffix == ".json":
        p.write_text(json.dumps(graph_to_json(g)) + "\n")
    else:
        p.write_text(format_edge_list(g))


def coloring_to_json(g: Graph, c: ViColoring) -> dict:
    return {
        "vertex_colors": [c[v] for v in range(g.n)],
        "incidence_colors": [{"v": x.vertex, "u": x.other, "color": c[x]} for x in incidences(g)],
    }


def coloring_from_json(data: dict) -> ViColoring:
    """Inverse of :func:`coloring_to_json`; ``v`` is the incidence's own vertex."""
    try:
        colors: dict = {i: int(c) for i, c in enumerate(data["vertex_colors"])}
        for row in data["incidence_colors"]:
            colors[Incidence(int(row["v"]), int(row["u"]))] = int(row["color"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad coloring JSON: {exc}") from None
    return ViColoring(colors)


def load_coloring(path: Union[str, Path]) -> ViColoring:
    return coloring_from_json(json.loads(Path(path).read_text()))


def to_dot(g: Graph, name: str = "G", coloring: ViColoring | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        label = f' label="{v}:{coloring[v]}"' if coloring is not None else ""
        out.append(f"  {v} [shape=circle{label}];")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def incidence_graph_dot(g: Graph) -> str:
    from .graph import incidence_graph

    inc = incidences(g)
    h = incidence_graph(g)
    out = ["graph incidence {"]
    for i, x in enumerate(inc):
        out.append(f'  {i} [shape=box label="({x.vertex},{x.other})"];')
    for a, b in h.edges:
        out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"


def power_dot(g: Graph) -> str:
    """``G^{3/3}`` with t-vertices as circles and i-vertices as boxes."""
    h, emap = three_thirds_power(g)
    out = ["graph power33 {"]
    for i, x in enumerate(emap.to_element):
        if isinstance(x, Incidence):
            out.append(f'  {i} [shape=box label="({x.vertex},{x.other})"];')
        else:
            out.append(f'  {i} [shape=circle label="{x}"];')
    for a, b in h.edges:
        out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"


def coloring_summary(g: Graph, c: ViColoring) -> list[str]:
    return [f"{x!r}: {c[x]}" for x in sorted(c.colors, key=element_key)]
