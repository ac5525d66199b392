from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from vicolor.checker import ViColoring, is_proper
from vicolor.exact import (
    NodeLimit,
    chi_vi,
    chi_vi_via_power,
    chromatic_number,
    default_node_limit,
    is_colorable,
)
from vicolor.graph import Graph, complete_graph, cycle_graph, elements, path_graph


def _brute_chi_vi(g: Graph, s=None) -> int:
    elems = elements(g)
    k = 1
    while True:
        for combo in itertools.product(range(1, k + 1), repeat=len(elems)):
            if is_proper(g, ViColoring(dict(zip(elems, combo))), s=s):
                return k
        k += 1


def _brute_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for combo in itertools.product(range(k), repeat=g.n):
            if all(combo[a] != combo[b] for a, b in g.edges):
                return k
    return 0


@settings(max_examples=40)
@given(graphs(max_n=4).filter(lambda g: g.n + 2 * g.m <= 8))
def test_chi_vi_matches_brute_force(g):
    assert chi_vi(g)[0] == _brute_chi_vi(g)


@settings(max_examples=25)
@given(graphs(max_n=4).filter(lambda g: g.n + 2 * g.m <= 8))
def test_spread_one_matches_brute_force(g):
    assert chi_vi(g, s=1)[0] == _brute_chi_vi(g, s=1)


@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    k, colors = chromatic_number(g)
    assert k == _brute_chromatic(g)


@given(graphs(max_n=5))
def test_two_routes_agree(g):
    k, w = chi_vi(g)
    assert k == chi_vi_via_power(g)
    assert is_proper(g, w, k=k)


def test_witness_and_unsat():
    res = is_colorable(cycle_graph(5), 4)
    assert res.unsat and res.witness is None
    res = is_colorable(cycle_graph(5), 5)
    assert res.sat and is_proper(cycle_graph(5), res.witness, k=5)


def test_spread_cap_raises_value():
    assert chi_vi(cycle_graph(3))[0] == 5
    assert chi_vi(cycle_graph(3), s=2)[0] == 5
    assert chi_vi(cycle_graph(3), s=1)[0] == 6


def test_paths_and_small_cases():
    assert chi_vi(Graph(1))[0] == 1
    assert chi_vi(path_graph(2))[0] == 4
    assert chi_vi(path_graph(5))[0] == 4
    assert chi_vi(complete_graph(4))[0] == 6


def test_node_limit():
    res = is_colorable(complete_graph(5), 6, node_limit=1)
    assert res.status in ("limit", "unsat")
    with pytest.raises(NodeLimit):
        chi_vi(complete_graph(5), node_limit=1)


def test_node_limit_env(monkeypatch):
    monkeypatch.setenv("VIC_NODE_LIMIT", "123")
    assert default_node_limit() == 123
    monkeypatch.delenv("VIC_NODE_LIMIT")
    assert default_node_limit() is None


def test_max_k():
    with pytest.raises(NodeLimit):
        chi_vi(cycle_graph(5), max_k=4)
