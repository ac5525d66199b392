from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from vicolor.canon import are_isomorphic, canonical_form
from vicolor.generators import GenSpec, Infeasible, enumerate_graphs, enumerate_up_to, gen_outerplanar
from vicolor.graph import Graph, girth, is_connected, is_two_connected
from vicolor.outerplanar import is_outerplanar

# connected graphs on n unlabeled vertices, n = 1..7
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]
ALL_COUNTS = [1, 2, 4, 11, 34, 156]


@st.composite
def specs(draw):
    two = draw(st.booleans())
    girth_min = draw(st.sampled_from([3, 4, 5, 6]))
    d = draw(st.integers(2, 8))
    n = draw(st.integers(girth_min, 80))
    return GenSpec(n=n, delta_max=d, girth_min=girth_min, two_connected=two, seed=draw(st.integers(0, 10**6)))


@given(specs())
def test_generated_graphs_meet_spec(spec):
    try:
        g = gen_outerplanar(spec)
    except Infeasible:
        return
    assert g.n == spec.n
    assert is_outerplanar(g) is not None
    assert g.max_degree <= spec.delta_max
    assert girth(g) >= spec.girth_min
    assert is_connected(g)
    if spec.two_connected:
        assert is_two_connected(g)


def test_generation_is_seeded():
    s = GenSpec(n=30, delta_max=4, girth_min=4, seed=11)
    assert gen_outerplanar(s) == gen_outerplanar(s)


def test_min_delta_is_reached():
    g = gen_outerplanar(GenSpec(n=30, delta_max=6, min_delta=6, seed=2))
    assert g.max_degree == 6


@pytest.mark.parametrize(
    "spec",
    [GenSpec(n=2, two_connected=True), GenSpec(n=5, girth_min=2), GenSpec(n=4, delta_max=3, min_delta=4)],
)
def test_infeasible_specs(spec):
    with pytest.raises(Infeasible):
        gen_outerplanar(spec)


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    assert sum(1 for _ in enumerate_graphs(n, connected=True)) == CONNECTED_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_all_graph_counts(n):
    assert sum(1 for _ in enumerate_graphs(n)) == ALL_COUNTS[n - 1]


def test_enumeration_is_pairwise_non_isomorphic():
    gs = [to_nx(g) for g in enumerate_graphs(5)]
    for a, b in itertools.combinations(gs, 2):
        assert not nx.is_isomorphic(a, b)


def test_max_degree_filter():
    got = list(enumerate_graphs(6, connected=True, max_degree=3))
    want = [g for g in enumerate_graphs(6, connected=True) if g.max_degree <= 3]
    assert {canonical_form(g) for g in got} == {canonical_form(g) for g in want}


def test_enumerate_up_to():
    assert sum(1 for _ in enumerate_up_to(4, connected=True)) == sum(CONNECTED_COUNTS[:4])


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_networkx(a, b):
    assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))
