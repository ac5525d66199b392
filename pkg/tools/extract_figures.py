"""Pull colored drawings out of the LaTeX source into fixture JSON files.

Each drawing is a 3-subdivided graph: filled nodes are vertices, hollow
nodes are incidences.  A path X - W1 - W2 - Y between filled nodes gives
edge XY with (X, Y) colored like W1 and (Y, X) colored like W2.
"""
from __future__ import annotations

import json
import re
import sys
from collections import defaultdict

NODE = re.compile(r"\\node\[(\w+)\]\s*\(([\w]+)\)\s*at\s*\(([^)]*)\)\s*\{\};")
LABEL = re.compile(r"\\node\s*(?:\(\))?\s*at\s*\(\s*([^)]*)\)\s*\{\$([^$]*)\$\};")
STYLE = re.compile(r"\\tikzset\{(\w+)/\.style\s*=\s*\{([^}]*)\}\}")
DRAW = re.compile(r"\\draw\[edge\]\s*(.*?);", re.S)


def pictures(text):
    return re.findall(r"\\begin\{tikzpicture\}(.*?)\\end\{tikzpicture\}", text, re.S)


def parse(body):
    black_styles = {name for name, spec in STYLE.findall(body) if "fill=black" in spec}
    nodes, labels = {}, {}
    last = None
    for line in body.splitlines():
        m = NODE.search(line)
        if m:
            style, name, _ = m.groups()
            nodes[name] = style in black_styles
            last = name
            continue
        m = LABEL.search(line)
        if m and last is not None and last not in labels:
            labels[last] = m.group(2).strip()
    adj = defaultdict(set)
    for path in DRAW.findall(body):
        names = re.findall(r"\(([\w]+)\)", path)
        for a, b in zip(names, names[1:]):
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
    return nodes, labels, adj


def components(adj, nodes):
    seen, out = set(), []
    for s in nodes:
        if s in seen or s not in adj:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(comp)
    return out


def extract(body):
    nodes, labels, adj = parse(body)
    out = []
    for comp in components(adj, nodes):
        if not all(labels.get(x, "").isdigit() for x in comp):
            continue
        blacks = sorted((x for x in comp if nodes[x]), key=lambda x: comp.index(x))
        index = {x: i for i, x in enumerate(blacks)}
        edges, inc = set(), {}
        for x in blacks:
            for w1 in adj[x]:
                if nodes[w1]:
                    raise ValueError(f"vertex {x} drawn adjacent to vertex {w1}")
                (w2,) = adj[w1] - {x}
                (y,) = adj[w2] - {w1}
                if nodes[w2] or not nodes[y]:
                    raise ValueError(f"bad subdivision path at {x}")
                edges.add(tuple(sorted((index[x], index[y]))))
                inc[(index[x], index[y])] = int(labels[w1])
        out.append({
            "names": blacks,
            "n": len(blacks),
            "edges": sorted(list(e) for e in edges),
            "vertex_colors": [int(labels[x]) for x in blacks],
            "incidence_colors": [{"v": v, "u": u, "color": c} for (v, u), c in sorted(inc.items())],
        })
    return out


if __name__ == "__main__":
    text = open(sys.argv[1]).read()
    for i, body in enumerate(pictures(text)):
        for fig in extract(body):
            print(i, json.dumps(fig))
