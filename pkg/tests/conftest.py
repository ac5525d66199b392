from __future__ import annotations

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vicolor.generators import GenSpec, Infeasible, gen_outerplanar
from vicolor.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# lines printed by the acceptance module, shown again in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = Graph(n, chosen)
    if connected and n > 1:
        # chain the components together
        comps = sorted(nx.connected_components(to_nx(g)), key=min)
        extra = [(min(a), min(b)) for a, b in zip(comps, comps[1:])]
        g = Graph(n, list(g.edges) + extra)
    return g


@st.composite
def outerplanar_graphs(draw, max_n: int = 40, max_delta: int = 6, girth_min: int = 3, two_connected=None) -> Graph:
    n = draw(st.integers(3, max_n))
    d = draw(st.integers(2, max_delta))
    tc = draw(st.booleans()) if two_connected is None else two_connected
    seed = draw(st.integers(0, 10**6))
    try:
        return gen_outerplanar(GenSpec(n=n, delta_max=d, girth_min=girth_min, two_connected=tc, seed=seed))
    except Infeasible:
        return gen_outerplanar(GenSpec(n=max(n, 2 * girth_min), delta_max=max(d, 3), girth_min=girth_min, seed=seed))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h
