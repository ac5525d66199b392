from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, outerplanar_graphs
from vicolor.checker import ViColoring, is_proper, verify
from vicolor.construct import (
    ConstructionError,
    CyclicInput,
    DegeneracyTooLarge,
    FixtureTable,
    NoApplicableTheorem,
    SpreadViolation,
    Trace,
    color,
    color_complete,
    color_cycle,
    color_degenerate,
    color_forest,
    color_outerplanar,
    color_outerplanar_girth,
    color_path,
    compose_cut_edge,
    compose_cut_vertex,
    load_fixtures,
)
from vicolor.construct.girth import block_budget
from vicolor.exact import chi_vi
from vicolor.generators import GenSpec, gen_outerplanar
from vicolor.graph import Graph, blocks, complete_graph, cycle_graph, degeneracy_order, girth, path_graph
from vicolor.outerplanar import NotOuterplanar


@pytest.mark.parametrize("n", range(3, 41))
def test_cycles_spread_two(n):
    c = color_cycle(n, 2)
    assert is_proper(cycle_graph(n), c, k=4 if n % 4 == 0 else 5, s=2)


@pytest.mark.parametrize("n", range(3, 41))
def test_cycles_spread_one(n):
    want = 6 if n == 3 else (4 if n % 4 == 0 else 5)
    assert is_proper(cycle_graph(n), color_cycle(n, 1), k=want, s=1)


@pytest.mark.parametrize("n", range(1, 30))
def test_paths(n):
    assert is_proper(path_graph(n), color_path(n), k=4 if n > 1 else 1, s=1)


@pytest.mark.parametrize("n", range(2, 16))
def test_complete_graphs(n):
    assert is_proper(complete_graph(n), color_complete(n), k=n + 2)


@st.composite
def trees(draw, max_n=30):
    n = draw(st.integers(2, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Graph(n, [(p, i + 1) for i, p in enumerate(parents)])


@given(trees())
def test_forests_use_delta_plus_two(g):
    c = color_forest(g)
    assert is_proper(g, c, k=max(g.max_degree + 2, 4), s=1)


@settings(max_examples=25)
@given(trees(max_n=6))
def test_forest_value_is_optimal(g):
    assert color_forest(g).k == chi_vi(g)[0]


def test_forest_rejects_cycles():
    with pytest.raises(CyclicInput):
        color_forest(cycle_graph(4))


@given(outerplanar_graphs(max_n=60, max_delta=8))
def test_outerplanar_bound(g):
    c = color_outerplanar(g)
    d = g.max_degree
    limit = 6 if d == 3 else max(d + 3, 4)
    assert is_proper(g, c, k=limit, s=2)


@given(outerplanar_graphs(max_n=60, max_delta=3))
def test_subcubic_uses_six(g):
    assert is_proper(g, color_outerplanar(g), k=6, s=2)


def _girth_limit(g: Graph) -> int:
    # the worst block budget, or the cut-vertex cost deg(v) + 2
    adj = g.to_adj()
    worst = 0
    for vs in blocks(adj).blocks:
        sub = {v: adj[v] & vs for v in vs}
        d = max(len(a) for a in sub.values())
        worst = max(worst, 4 if len(vs) == 2 else block_budget(d, girth(sub), len(vs)))
    return max(worst, g.max_degree + 2)


@given(outerplanar_graphs(max_n=60, max_delta=8, girth_min=4))
def test_girth_colorer_within_block_budgets(g):
    c = color_outerplanar_girth(g)
    assert is_proper(g, c, k=_girth_limit(g), s=1)


@given(st.integers(5, 8), st.integers(0, 10**6), st.booleans())
def test_large_degree_is_optimal(d, seed, tc):
    g = gen_outerplanar(GenSpec(n=40, delta_max=d, min_delta=d, girth_min=4, two_connected=tc, seed=seed))
    c = color_outerplanar_girth(g)
    assert is_proper(g, c, k=d + 2, s=1)


@settings(max_examples=20)
@given(outerplanar_graphs(max_n=7, max_delta=5, girth_min=4))
def test_girth_colorer_against_exact(g):
    c = color_outerplanar_girth(g)
    k, _ = chi_vi(g, s=1)
    assert c.k >= k
    if g.max_degree >= 5:
        assert c.k == k


def test_triangle_rejected_by_girth_colorer():
    with pytest.raises(NoApplicableTheorem):
        color_outerplanar_girth(cycle_graph(3))
    with pytest.raises(NoApplicableTheorem):
        color(cycle_graph(3), spread=1, strategy="girth")


def test_non_outerplanar_rejected():
    with pytest.raises(NotOuterplanar):
        color_outerplanar(complete_graph(4))
    with pytest.raises(NotOuterplanar):
        color(complete_graph(4), strategy="outerplanar")


def test_auto_falls_back_with_a_note():
    tr = Trace()
    c = color(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]), spread=1, trace=tr)
    assert tr.steps[0]["step"] == "fallback"
    assert c.k == 6


def test_auto_on_non_outerplanar_uses_degeneracy():
    g = complete_graph(5)
    c = color(g)
    assert is_proper(g, c, k=g.max_degree + 2 * 4, s=4)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        color(cycle_graph(4), strategy="magic")


@given(graphs(min_n=3, max_n=9).filter(lambda g: g.max_degree >= 2))
def test_degeneracy_greedy_bound(g):
    _, k = degeneracy_order(g.to_adj())
    k = max(k, 1)
    c = color_degenerate(g, k)
    assert is_proper(g, c, k=max(g.max_degree + 2 * k, 1), s=k)


def test_degeneracy_too_large():
    with pytest.raises(DegeneracyTooLarge):
        color_degenerate(complete_graph(5), 2)
    with pytest.raises(ValueError):
        color_degenerate(path_graph(2), 1)


@given(outerplanar_graphs(max_n=80, max_delta=8))
def test_trace_reports_every_step(g):
    tr = Trace()
    color_outerplanar(g, tr)
    assert all("step" in s for s in tr.steps)
    assert set(tr.routes()) <= {"direct", "prescribed", "recolor", "local", "local+recolor", "greedy"}


# --- composition ---------------------------------------------------------


def _split_at_edge(seed: int, s):
    rng = random.Random(seed)
    a, b = rng.randint(2, 4), rng.randint(2, 4)
    g1 = gen_outerplanar(GenSpec(n=a, delta_max=3, two_connected=False, seed=seed)) if a > 2 else path_graph(2)
    g2 = gen_outerplanar(GenSpec(n=b, delta_max=3, two_connected=False, seed=seed + 1)) if b > 2 else path_graph(2)
    edges = list(g1.edges) + [(a + p, a + q) for p, q in g2.edges] + [(0, a)]
    g = Graph(a + b, edges)
    h1 = Graph(a + 1, list(g1.edges) + [(0, a)])
    h2 = Graph(b + 1, [(p + 1, q + 1) for p, q in g2.edges] + [(0, 1)])
    k1, w1 = chi_vi(h1, s=s)
    k2, w2 = chi_vi(h2, s=s)
    w2 = w2.relabeled({0: 0, **{i + 1: a + i for i in range(b)}})
    return g, (0, a), w1, w2, max(k1, k2)


@settings(max_examples=20)
@given(st.integers(0, 10**5), st.sampled_from([None, 1, 2]))
def test_cut_edge_composition(seed, s):
    g, e, w1, w2, k = _split_at_edge(seed, s)
    c = compose_cut_edge(g, e, w1, w2)
    assert is_proper(g, c, k=k, s=s)
    assert chi_vi(g, s=s)[0] == k


@settings(max_examples=20)
@given(st.integers(3, 5), st.integers(3, 5), st.integers(0, 10**5))
def test_cut_vertex_composition(a, b, seed):
    g1 = gen_outerplanar(GenSpec(n=a, delta_max=3, seed=seed))
    g2 = gen_outerplanar(GenSpec(n=b, delta_max=3, seed=seed + 7))
    edges = list(g1.edges) + [(p + a - 1, q + a - 1) for p, q in g2.edges]
    g = Graph(a + b - 1, edges)
    v = a - 1
    k1, w1 = chi_vi(g1, s=1)
    k2, w2 = chi_vi(g2, s=1)
    w2 = w2.relabeled({i: i + a - 1 for i in range(b)})
    c = compose_cut_vertex(g, v, w1, w2)
    want = max(k1, k2, g.degree(v) + 2)
    assert is_proper(g, c, k=want, s=1)
    assert chi_vi(g, s=1)[0] == want


def test_cut_vertex_needs_spread_one():
    g1 = cycle_graph(3)
    _, w1 = chi_vi(g1, s=1)
    w_bad = None
    # a C_5 coloring where vertex 0 sees two colors on I_2(0)
    for k in range(5, 8):
        from vicolor.exact import is_colorable

        res = is_colorable(cycle_graph(5), k)
        if res.sat and verify(cycle_graph(5), res.witness).spread[0] == 2:
            w_bad = res.witness
            break
    if w_bad is None:
        pytest.skip("search returned a spread-1 coloring")
    w_bad = w_bad.relabeled({0: 0, 1: 3, 2: 4, 3: 5, 4: 6})
    with pytest.raises(SpreadViolation):
        compose_cut_vertex(None, 0, w1, w_bad)


def test_cut_edge_missing_side():
    with pytest.raises(ValueError):
        compose_cut_edge(None, (0, 1), ViColoring({0: 1}), ViColoring({1: 2}))


# --- fixtures ------------------------------------------------------------


def test_fixtures_verify_with_captions():
    fx = load_fixtures()
    assert len(fx) == 9
    for f in fx.values():
        assert is_proper(f.graph, f.coloring, k=f.k, s=f.s), f.name


def test_fixture_lookup_on_relabelled_graph():
    table = FixtureTable()
    f = load_fixtures()["order8_delta4_girth4"]
    perm = list(range(f.graph.n))
    random.Random(3).shuffle(perm)
    adj = {100 + perm[v]: {100 + perm[w] for w in f.graph.adj[v]} for v in range(f.graph.n)}
    colors = table.lookup(adj, max_spread=1)
    assert colors is not None
    g, labels = Graph.from_adjacency(adj)
    index = {x: i for i, x in enumerate(labels)}
    c = ViColoring(colors).relabeled(index)
    assert is_proper(g, c, k=f.k, s=1)


def test_fixture_graphs_are_the_stated_classes():
    fx = load_fixtures()
    g = nx.Graph(list(fx["diamond"].graph.edges))
    assert sorted(d for _, d in g.degree) == [2, 2, 3, 3]
