from __future__ import annotations

import json

import pytest
from hypothesis import given

from conftest import graphs, outerplanar_graphs
from vicolor.construct import color_outerplanar
from vicolor.formats import (
    FormatError,
    coloring_from_json,
    coloring_to_json,
    format_edge_list,
    load_graph,
    parse_edge_list,
    power_dot,
    save_graph,
    to_dot,
)
from vicolor.graph import Graph, Incidence, cycle_graph


@given(graphs(max_n=8))
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(g=graphs(max_n=8))
def test_file_round_trip(tmp_path_factory, g):
    d = tmp_path_factory.mktemp("g")
    for name in ("g.json", "g.txt"):
        save_graph(g, d / name)
        assert load_graph(d / name) == g


@given(outerplanar_graphs(max_n=20))
def test_coloring_round_trip(g):
    c = color_outerplanar(g)
    data = json.loads(json.dumps(coloring_to_json(g, c)))
    assert coloring_from_json(data).colors == c.colors


def test_coloring_json_shape():
    g = Graph(2, [(0, 1)])
    from vicolor.checker import ViColoring

    c = ViColoring({0: 1, 1: 2, Incidence(0, 1): 3, Incidence(1, 0): 4})
    data = coloring_to_json(g, c)
    assert data["vertex_colors"] == [1, 2]
    # "v" is the incidence's own vertex, "u" the other end
    assert {"v": 0, "u": 1, "color": 3} in data["incidence_colors"]


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "x y\n", "2 1\n0 1 2\n"])
def test_bad_edge_lists(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_comments_and_blank_lines():
    assert parse_edge_list("# triangle\n3 3\n\n0 1\n1 2 # side\n2 0\n") == cycle_graph(3)


def test_bad_coloring_json():
    with pytest.raises(FormatError):
        coloring_from_json({"vertex_colors": [1]})


def test_dot_output():
    dot = to_dot(cycle_graph(3))
    assert dot.startswith("graph G {") and "0 -- 1;" in dot
    p = power_dot(Graph(2, [(0, 1)]))
    assert p.count("shape=box") == 2 and p.count("shape=circle") == 2
