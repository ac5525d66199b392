from __future__ import annotations

import json
import subprocess
import sys

import pytest

from vicolor.certificates import classify, detect_forbidden
from vicolor.cli import certificate_json, embedding_json, embedding_list_json, main
from vicolor.construct import color
from vicolor.exact import chi_vi
from vicolor.formats import coloring_to_json, format_edge_list, graph_to_json, load_graph, save_graph
from vicolor.generators import GenSpec, gen_outerplanar
from vicolor.graph import Graph, cycle_graph, three_thirds_power

DIAMOND = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)])


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {
        "c5": cycle_graph(5),
        "diamond": DIAMOND,
        "op": gen_outerplanar(GenSpec(n=14, delta_max=5, girth_min=4, seed=3)),
        "k4": Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]),
    }.items():
        p = tmp_path / f"{name}.json"
        save_graph(g, p)
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_embed_golden(capsys, files):
    code, out, _ = run(capsys, "embed", files["op"])
    assert code == 0
    assert json.loads(out) == embedding_json(load_graph(files["op"]))


def test_embed_rejects_non_outerplanar(capsys, files):
    code, data = run_json(capsys, "embed", files["k4"])
    assert code == 2 and "NotOuterplanar" in data["error"]


@pytest.mark.parametrize("spread", [1, 2])
def test_color_golden(capsys, files, spread):
    out_path = files["dir"] / "c.json"
    code, _, _ = run(capsys, "color", files["op"], "--spread", str(spread), "-o", str(out_path))
    assert code == 0
    g = load_graph(files["op"])
    assert json.loads(out_path.read_text()) == coloring_to_json(g, color(g, spread=spread))


def test_color_explain(capsys, files):
    code, data = run_json(capsys, "color", files["op"], "--spread", "1", "--explain")
    assert code == 0
    assert data["result"]["trace"]
    assert data["result"]["max_spread"] <= 1


def test_color_girth_on_triangle_is_usage_error(capsys, files):
    code, _, err = run(capsys, "color", files["diamond"], "--strategy", "girth")
    assert code == 2 and "NoApplicableTheorem" in err


def test_exact_and_verify(capsys, files):
    w = files["dir"] / "w.json"
    code, out, _ = run(capsys, "exact", files["c5"], "-o", str(w))
    assert code == 0 and out.startswith("chi_vi = 5")
    assert chi_vi(cycle_graph(5))[0] == 5
    code, data = run_json(capsys, "verify", files["c5"], str(w))
    assert code == 0 and data["result"]["valid"]
    code, data = run_json(capsys, "verify", files["c5"], str(w), "--k", "4")
    assert code == 1


def test_verify_reports_violations(capsys, files):
    ring = [(i, (i + 1) % 5) for i in range(5)]
    bad = {
        "vertex_colors": [1] * 5,
        "incidence_colors": [{"v": v, "u": u, "color": 2} for a, b in ring for v, u in ((a, b), (b, a))],
    }
    p = files["dir"] / "bad.json"
    p.write_text(json.dumps(bad))
    code, data = run_json(capsys, "verify", files["c5"], str(p))
    assert code == 1
    assert not data["result"]["valid"] and data["result"]["violations"]


def test_exact_node_limit_exit_code(capsys, files, monkeypatch):
    code, data = run_json(capsys, "exact", files["k4"], "--node-limit", "1")
    assert code in (0, 3)
    monkeypatch.setenv("VIC_NODE_LIMIT", "1")
    code, _, _ = run(capsys, "exact", files["k4"], "--max-k", "5")
    assert code == 3


def test_classify_golden(capsys, files):
    code, data = run_json(capsys, "classify", files["diamond"])
    assert code == 0
    assert data["result"] == certificate_json(classify(DIAMOND))
    assert data["result"]["certificate"] == "forbidden-subgraph"
    assert data["result"]["class"] == 2


def test_gen_golden(capsys, files):
    out = files["dir"] / "g.json"
    code, _, _ = run(capsys, "gen", "--n", "12", "--delta", "4", "--girth", "4", "--two-connected", "--seed", "7", "-o", str(out))
    assert code == 0
    want = gen_outerplanar(GenSpec(n=12, delta_max=4, girth_min=4, two_connected=True, seed=7))
    assert json.loads(out.read_text()) == graph_to_json(want)


def test_power_golden(capsys, files):
    code, out, _ = run(capsys, "power", files["c5"])
    assert code == 0
    h, _ = three_thirds_power(cycle_graph(5))
    assert out == format_edge_list(h)
    code, out, _ = run(capsys, "power", files["c5"], "--dot")
    assert out.startswith("graph power33")


def test_detect_golden(capsys, files):
    code, data = run_json(capsys, "detect", files["diamond"])
    assert code == 0
    assert data["result"] == embedding_list_json(detect_forbidden(DIAMOND))


def test_usage_errors(capsys, files):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "color", files["c5"], "--spread", "3")[0] == 2
    assert run(capsys, "color", str(files["dir"] / "missing.json"))[0] == 2


def test_manifest_is_reproducible(capsys, files):
    _, a = run_json(capsys, "color", files["op"], "--spread", "1")
    _, b = run_json(capsys, "color", files["op"], "--spread", "1")
    ma, mb = a["manifest"], b["manifest"]
    for key in ("command", "inputs", "seed", "versions", "summary"):
        assert ma[key] == mb[key]
    assert set(ma) == {"command", "inputs", "seed", "versions", "wall_time", "summary"}


def test_text_mode_writes_manifest_to_stderr(capsys, files):
    _, _, err = run(capsys, "detect", files["c5"])
    assert err.startswith("# manifest ")
    json.loads(err[len("# manifest ") :])


def test_reproduce_quick(capsys):
    code, data = run_json(capsys, "reproduce", "--quick")
    assert code == 0
    assert [r["criterion"] for r in data["result"]] == list(range(1, 11))


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "vicolor.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("vic ")
