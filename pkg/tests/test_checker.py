from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from vicolor.checker import (
    NotApplicable,
    PartialColoring,
    ViColoring,
    is_proper,
    lower_bound,
    verify,
    verify_spread_lemma,
)
from vicolor.construct import color_complete, color_cycle
from vicolor.graph import Graph, Incidence, cycle_graph, elements, star_graph, three_thirds_power


def _proper_on_power(g: Graph, c: ViColoring) -> bool:
    h, emap = three_thirds_power(g)
    return all(c[emap.to_element[a]] != c[emap.to_element[b]] for a, b in h.edges)


@given(graphs(max_n=6), st.integers(0, 10**6), st.integers(2, 6))
def test_verify_agrees_with_power_graph(g, seed, k):
    rng = random.Random(seed)
    c = ViColoring({x: rng.randint(1, k) for x in elements(g)})
    assert verify(g, c).valid == _proper_on_power(g, c)


def test_violation_reasons():
    g = Graph(2, [(0, 1)])
    c = ViColoring({0: 1, 1: 1, Incidence(0, 1): 2, Incidence(1, 0): 2})
    rep = verify(g, c)
    assert not rep.valid
    reasons = {v.reason for v in rep.violations}
    assert reasons == {"adjacent-tt", "adjacent-ii"}


def test_incident_violation():
    g = Graph(2, [(0, 1)])
    c = ViColoring({0: 1, 1: 2, Incidence(0, 1): 1, Incidence(1, 0): 3})
    assert [v.reason for v in verify(g, c).violations] == ["incident-ti"]


def test_partial_coloring_raises():
    with pytest.raises(PartialColoring):
        verify(Graph(2, [(0, 1)]), ViColoring({0: 1, 1: 2}))
    assert not is_proper(Graph(2, [(0, 1)]), ViColoring({0: 1, 1: 2}))


def test_spread_is_counted_on_second_incidences():
    g = star_graph(3)
    c = ViColoring({0: 1, 1: 2, 2: 2, 3: 2})
    for leaf in (1, 2, 3):
        c[Incidence(0, leaf)] = 2 + leaf  # 3, 4, 5 on I_1(0)
        c[Incidence(leaf, 0)] = 6
    rep = verify(g, c)
    assert rep.valid
    assert rep.spread[0] == 1
    assert rep.spread[1] == 1
    assert is_proper(g, c, k=6, s=1)
    assert not is_proper(g, c, k=5)


def test_lower_bound():
    assert lower_bound(cycle_graph(5)) == 4
    assert lower_bound(Graph(3)) == 1
    assert lower_bound(Graph(0)) == 0


def test_spread_lemma_needs_exactly_delta_plus_two():
    g = cycle_graph(5)
    with pytest.raises(NotApplicable):
        verify_spread_lemma(g, color_cycle(5))  # 5 colors, Δ+2 = 4
    assert verify_spread_lemma(cycle_graph(8), color_cycle(8))
    with pytest.raises(NotApplicable):
        verify_spread_lemma(Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]), color_complete(4))


def test_relabel_and_restrict():
    c = color_cycle(4)
    r = c.relabeled({0: 10, 1: 11, 2: 12, 3: 13})
    assert r[10] == c[0] and r[Incidence(10, 11)] == c[Incidence(0, 1)]
    sub = c.restricted({0: [1], 1: [0]})
    assert set(sub.colors) == {0, 1, Incidence(0, 1), Incidence(1, 0)}
