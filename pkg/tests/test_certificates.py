from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import graphs, outerplanar_graphs
from vicolor.certificates import PATTERNS, classify, detect_forbidden, pattern_graph
from vicolor.checker import is_proper
from vicolor.exact import chi_vi, is_colorable
from vicolor.graph import Graph, complete_graph, cycle_graph

THREE_VERTICES = {"G1": {"a", "b"}, "G2": {"a", "b", "c"}, "G3": {"a", "b", "e"}, "G4": {"a", "b", "d", "e"}}


@pytest.mark.parametrize("name", sorted(PATTERNS))
def test_pattern_degrees(name):
    g, labels = pattern_graph(name)
    assert {labels[v] for v in range(g.n) if g.degree(v) == 3} == THREE_VERTICES[name]
    assert g.max_degree == 3


@pytest.mark.parametrize("name", sorted(PATTERNS))
def test_each_pattern_needs_six_colors(name):
    g, _ = pattern_graph(name)
    assert detect_forbidden(g)
    assert is_colorable(g, 5).unsat
    assert chi_vi(g)[0] == 6


def test_degree_respecting():
    # K_4 - e inside a graph where one of its 3-vertices has degree 4
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (0, 4)])
    assert g.max_degree == 4
    assert detect_forbidden(g) == []
    # degree-3 hosts only: a 3-vertex of the pattern must be a 3-vertex of the host
    h = Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (2, 4), (4, 5)])
    for emb in detect_forbidden(h):
        m = emb.as_dict()
        assert all(h.degree(m[x]) == 3 for x in THREE_VERTICES[emb.pattern])


def test_cycles_have_no_patterns():
    assert detect_forbidden(cycle_graph(6)) == []


@settings(max_examples=30)
@given(outerplanar_graphs(max_n=8, max_delta=3))
def test_detection_implies_six(g):
    if detect_forbidden(g, first_only=True):
        assert is_colorable(g, 5).unsat


@pytest.mark.parametrize(
    "g,lo,cls,kind",
    [
        (complete_graph(5), 7, 2, "exhausted-search"),
        (cycle_graph(4), 4, 1, "clique"),
        (cycle_graph(5), 5, 2, "exhausted-search"),
        (Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]), 6, 2, "forbidden-subgraph"),
    ],
    ids=["K5", "C4", "C5", "K4-e"],
)
def test_classify_examples(g, lo, cls, kind):
    cert = classify(g)
    assert cert.tight and cert.lo == lo
    assert cert.vi_class == cls
    assert cert.kind == kind
    assert is_proper(g, cert.upper.coloring, k=cert.hi)


@settings(max_examples=30)
@given(graphs(min_n=2, max_n=6, connected=True))
def test_classify_interval_contains_exact_value(g):
    cert = classify(g)
    k, _ = chi_vi(g)
    assert cert.lo <= k <= cert.hi
    assert cert.tight
    assert cert.vi_class in (1, 2)


def test_classify_with_small_budget_stays_sound():
    g = complete_graph(5)
    cert = classify(g, budget=1)
    assert cert.lo <= 7 <= cert.hi


def test_classify_rejects_edgeless():
    with pytest.raises(ValueError):
        classify(Graph(3))
