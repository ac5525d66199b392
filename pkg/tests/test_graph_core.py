from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from vicolor.graph import (
    Graph,
    Incidence,
    blocks,
    complete_graph,
    cycle_graph,
    degeneracy_order,
    element_neighbors,
    elements,
    girth,
    incidence_graph,
    incidences,
    is_two_connected,
    power,
    subdivide,
    three_thirds_power,
)


def _related(g: Graph, x, y) -> bool:
    """Direct reading of the relation on V ∪ I, used as an oracle."""
    if x == y:
        return False
    xi, yi = isinstance(x, Incidence), isinstance(y, Incidence)
    if not xi and not yi:
        return g.has_edge(x, y)
    if xi and yi:
        (v, u), (w, z) = x, y
        # same first vertex, same edge, or the pair forms a path v-u=w-z or w-z=v-u
        return v == w or {v, u} == {w, z} or u == w or z == v
    if yi:
        x, y = y, x
    v, u = x
    return y in (v, u)


def test_graph_normalises_edges():
    g = Graph(3, [(1, 0), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.adj == ((1,), (0, 2), (1,))
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_incidence_count():
    g = complete_graph(4)
    assert len(incidences(g)) == 2 * g.m
    assert len(elements(g)) == g.n + 2 * g.m


@given(graphs(max_n=6))
def test_element_neighbours_match_relation(g):
    adj = g.to_adj()
    for x in elements(g):
        want = {y for y in elements(g) if _related(g, x, y)}
        assert set(element_neighbors(adj, x)) == want


@given(graphs(max_n=6))
def test_three_thirds_power_realises_relation(g):
    h, emap = three_thirds_power(g)
    assert h.n == g.n + 2 * g.m
    for x in elements(g):
        for y in elements(g):
            if x != y:
                assert h.has_edge(emap[x], emap[y]) == _related(g, x, y)


@given(graphs(max_n=6))
def test_power_matches_networkx(g):
    sub = subdivide(g, 3)
    nxsub = to_nx(sub)
    want = nx.power(nxsub, 3)
    got = power(sub, 3)
    assert set(got.edges) == {tuple(sorted(e)) for e in want.edges}


@given(graphs(max_n=6))
def test_subdivide_shape(g):
    s = subdivide(g, 3)
    assert s.n == g.n + 2 * g.m
    assert s.m == 3 * g.m


def test_incidence_graph_of_triangle():
    h = incidence_graph(cycle_graph(3))
    assert h.n == 6
    # each incidence is adjacent to every other except the one opposite
    assert h.m == 12


@given(graphs(max_n=8))
def test_girth_matches_networkx(g):
    want = nx.girth(to_nx(g))
    assert girth(g) == want


@given(graphs(max_n=8))
def test_blocks_match_networkx(g):
    bd = blocks(g)
    want = {frozenset(c) for c in nx.biconnected_components(to_nx(g))}
    assert {frozenset(b) for b in bd.blocks} == want
    assert set(bd.cut_vertices) == set(nx.articulation_points(to_nx(g)))
    assert {tuple(sorted(e)) for e in bd.cut_edges} == {tuple(sorted(e)) for e in nx.bridges(to_nx(g))}


@given(graphs(max_n=8))
def test_degeneracy_matches_core_number(g):
    order, k = degeneracy_order(g.to_adj())
    want = max(nx.core_number(to_nx(g)).values(), default=0)
    assert k == want
    assert sorted(order) == list(range(g.n))


@given(graphs(min_n=3, max_n=8))
def test_two_connected_matches_networkx(g):
    assert is_two_connected(g) == nx.is_biconnected(to_nx(g))


def test_girth_of_forest_is_infinite():
    assert girth(Graph(3, [(0, 1), (1, 2)])) == math.inf
