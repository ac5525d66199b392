"""The acceptance checks, as functions returning one row each.

Used by ``vic reproduce`` and by the acceptance test module.  Every check
recomputes its values; nothing is read from stored results.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .certificates import detect_forbidden
from .checker import ViColoring, is_proper, verify, verify_spread_lemma
from .construct import (
    color_complete,
    color_cycle,
    color_degenerate,
    color_outerplanar,
    color_outerplanar_girth,
    compose_cut_edge,
    compose_cut_vertex,
    load_fixtures,
)
from .exact import chi_vi, chi_vi_via_power, is_colorable
from .generators import GenSpec, Infeasible, enumerate_graphs, gen_outerplanar
from .graph import Graph, complete_graph, cycle_graph, girth


@dataclass
class Row:
    criterion: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.criterion:>2}. {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


class Witnesses:
    """(graph, coloring) pairs using exactly Δ+2 colors, gathered for the spread lemma."""

    def __init__(self) -> None:
        self.items: list[tuple[Graph, ViColoring]] = []

    def offer(self, g: Graph, c: ViColoring) -> None:
        if g.m > 0 and c.k == g.max_degree + 2:
            self.items.append((g, c))


# --- 1, 2: cycles and complete graphs ---------------------------------------

CYCLE_VALUES = {3: 5, 4: 4, 5: 5, 6: 5, 7: 5, 8: 4, 9: 5, 10: 5}
CYCLE_SPREAD1_VALUES = {3: 6, 8: 4, 5: 5}


def check_cycles(witnesses: Optional[Witnesses] = None) -> Row:
    t = time.time()
    bad = []
    got = []
    for n, want in CYCLE_VALUES.items():
        k, w = chi_vi(cycle_graph(n))
        got.append(k)
        if witnesses is not None:
            witnesses.offer(cycle_graph(n), w)
        if k != want or color_cycle(n, 2).k != want:
            bad.append(("chi_vi", n, k, want))
    for n, want in CYCLE_SPREAD1_VALUES.items():
        k, w = chi_vi(cycle_graph(n), s=1)
        if witnesses is not None:
            witnesses.offer(cycle_graph(n), w)
        if k != want or color_cycle(n, 1).k != want:
            bad.append(("chi_vi_1", n, k, want))
    detail = f"C_3..C_10 -> {','.join(map(str, got))}; spread 1: C_3,C_8,C_5 checked"
    return Row(1, "cycle values", not bad, detail, time.time() - t, bad)


def check_complete(witnesses: Optional[Witnesses] = None) -> Row:
    t = time.time()
    bad, got = [], []
    for n in range(2, 6):
        g = complete_graph(n)
        k, w = chi_vi(g)
        got.append(k)
        c = color_complete(n)
        if k != n + 2 or not is_proper(g, c, k=n + 2):
            bad.append((n, k))
        if witnesses is not None:
            witnesses.offer(g, w)
    return Row(2, "complete graph values", not bad, f"K_2..K_5 -> {','.join(map(str, got))}", time.time() - t, bad)


# --- 3: power identity ------------------------------------------------------


def _power_pair(g: Graph) -> tuple:
    k, w = chi_vi(g)
    return g, k, w, chi_vi_via_power(g)


def corpus(max_n: int = 7) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in enumerate_graphs(n, connected=True)]


def check_power_identity(witnesses: Optional[Witnesses] = None, max_n: int = 7, jobs: int = 1) -> Row:
    t = time.time()
    graphs = corpus(max_n)
    bad = []
    for g, k, w, kp in _pmap(_power_pair, graphs, jobs):
        if k != kp or not is_proper(g, w, k=k):
            bad.append((g.n, g.edges, k, kp))
        if witnesses is not None:
            witnesses.offer(g, w)
    detail = f"{len(graphs) - len(bad)}/{len(graphs)} connected graphs on <= {max_n} vertices agree"
    return Row(3, "chi over V+I equals chi of the 3/3-power", not bad, detail, time.time() - t, bad)


# --- 4: fixtures ------------------------------------------------------------


def check_fixtures() -> Row:
    t = time.time()
    fx = load_fixtures()
    bad = [name for name, f in fx.items() if not is_proper(f.graph, f.coloring, k=f.k, s=f.s)]
    figures = {f.source.split()[1] for f in fx.values()}  # one drawing may hold two colorings
    detail = f"{len(fx) - len(bad)}/{len(fx)} fixture colorings from {len(figures)} drawings verify"
    return Row(4, "fixture colorings", not bad and len(figures) == 8, detail, time.time() - t, bad)


# --- 5, 6: constructive colorers on random graphs ----------------------------


def _draw(count: int, make_spec: Callable[[random.Random, int, int], GenSpec], rng: random.Random, seed: int) -> list[Graph]:
    """``count`` generated graphs; a spec the generator cannot meet is replaced by the next seed."""
    out: list[Graph] = []
    while len(out) < count:
        spec = make_spec(rng, len(out), seed)
        seed += 1
        try:
            out.append(gen_outerplanar(spec, retries=400))
        except Infeasible:
            continue
    return out


def outerplanar_corpus(count: int = 500, max_n: int = 200) -> list[Graph]:
    def make(rng, i, seed):
        d = 2 + i % 7
        return GenSpec(n=rng.randint(max(3, d + 1), max_n), delta_max=d, min_delta=d, two_connected=bool(seed % 2), seed=seed)

    return _draw(count, make, random.Random(20240501), 0)


def _outerplanar_one(g: Graph):
    c = color_outerplanar(g)
    rep = verify(g, c)
    d = g.max_degree
    limit = 6 if d == 3 else d + 3
    return (g.n, d, c.k, rep.valid and rep.max_spread <= 2 and c.k <= limit)


def check_outerplanar_bound(count: int = 500, jobs: int = 1) -> Row:
    t = time.time()
    out = _pmap(_outerplanar_one, outerplanar_corpus(count), jobs)
    bad = [r for r in out if not r[3]]
    degrees = sorted({r[1] for r in out})
    detail = (
        f"{len(out) - len(bad)}/{len(out)} verify, n <= {max(r[0] for r in out)}, "
        f"Δ in {degrees[0]}..{degrees[-1]}, subcubic max {max((r[2] for r in out if r[1] == 3), default=0)} colors"
    )
    return Row(5, "outerplanar: <= Δ+3 colors, spread <= 2", not bad, detail, time.time() - t, bad)


REGIMES = {
    "Δ=3,g>=4": dict(deltas=(3,), girth_min=4, bound=lambda d, g: 6, exact=False),
    "Δ>=4,g>=4": dict(deltas=(4, 5, 6, 7, 8), girth_min=4, bound=lambda d, g: d + 3, exact=False),
    "Δ>=4,g>=6": dict(deltas=(4, 5, 6, 7, 8), girth_min=6, bound=lambda d, g: d + 2, exact=True),
    "Δ>=5,g>=4": dict(deltas=(5, 6, 7, 8), girth_min=4, bound=lambda d, g: d + 2, exact=True),
}


def regime_graphs(name: str, count: int = 200, max_n: int = 120) -> list[Graph]:
    reg = REGIMES[name]

    def make(rng, i, seed):
        d = reg["deltas"][i % len(reg["deltas"])]
        n = rng.randint(max(2 * reg["girth_min"], d + 4), max_n)
        return GenSpec(n=n, delta_max=d, min_delta=d, girth_min=reg["girth_min"], two_connected=bool(seed % 2), seed=seed)

    return _draw(count, make, random.Random(sum(map(ord, name))), 1000)


def _regime_one(args):
    name, g = args
    reg = REGIMES[name]
    c = color_outerplanar_girth(g)
    rep = verify(g, c)
    d, gg = g.max_degree, girth(g)
    bound = reg["bound"](d, gg)
    ok = rep.valid and rep.max_spread <= 1 and c.k <= bound and d in reg["deltas"] and gg >= reg["girth_min"]
    if reg["exact"]:
        ok = ok and c.num_colors == bound
    return (g.n, d, gg, c.k, ok)


def check_girth_regimes(count: int = 200, jobs: int = 1) -> Row:
    t = time.time()
    parts, bad = [], []
    for name in REGIMES:
        res = _pmap(_regime_one, [(name, g) for g in regime_graphs(name, count)], jobs)
        wrong = [r for r in res if not r[4]]
        bad += [(name,) + r for r in wrong]
        parts.append(f"{name}: {len(res) - len(wrong)}/{len(res)}")
    return Row(6, "girth regimes, spread 1", not bad, "; ".join(parts), time.time() - t, bad)


# --- 7: tightness for subcubic graphs ----------------------------------------


def subcubic_hosts(max_n: int = 8) -> list[Graph]:
    return [
        g
        for n in range(4, max_n + 1)
        for g in enumerate_graphs(n, connected=True, max_degree=3)
        if g.max_degree == 3
    ]


def _tight_one(g: Graph):
    if not detect_forbidden(g, first_only=True):
        return None
    res = is_colorable(g, 5)
    return (g.n, g.edges, res.status)


def check_subcubic_tightness(max_n: int = 8, jobs: int = 1) -> Row:
    t = time.time()
    diamond = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)])
    k, _ = chi_vi(diamond)
    bad = []
    if not is_colorable(diamond, 5).unsat or k != 6:
        bad.append(("K4-e", k))
    hosts = subcubic_hosts(max_n)
    res = [r for r in _pmap(_tight_one, hosts, jobs) if r is not None]
    bad += [r for r in res if r[2] != "unsat"]
    detail = f"K_4-e: chi_vi={k}; {len(res)} of {len(hosts)} subcubic hosts carry a pattern, all 5-uncolorable" if not bad else f"{len(bad)} failures"
    return Row(7, "6 colors needed for subcubic patterns", not bad, detail, time.time() - t, bad)


# --- 8: spread lemma --------------------------------------------------------


def check_spread_lemma(witnesses: Witnesses) -> Row:
    t = time.time()
    bad = [(g.n, g.edges) for g, c in witnesses.items if not verify_spread_lemma(g, c)]
    n = len(witnesses.items)
    detail = f"{n - len(bad)}/{n} colorings with Δ+2 colors respect |c(I_2(v))| <= Δ-d(v)+1"
    return Row(8, "spread lemma", not bad and n > 0, detail, time.time() - t, bad)


# --- 9: composition ---------------------------------------------------------


def _small_connected(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    spec = GenSpec(n=n, delta_max=rng.randint(2, 4), two_connected=rng.random() < 0.5, seed=rng.randrange(1 << 30))
    return gen_outerplanar(spec)


def composition_cases(count: int = 50, max_n: int = 9) -> list[tuple]:
    """``(kind, G, part1 vertices, part2 vertices, join)`` for cut edges and cut vertices."""
    rng = random.Random(99)
    out = []
    for i in range(count):
        kind = "edge" if i % 2 == 0 else "vertex"
        while True:
            a = rng.randint(1 if kind == "edge" else 2, 5)
            b = rng.randint(1 if kind == "edge" else 2, 5)
            total = a + b - (1 if kind == "vertex" else 0)
            if total <= max_n:
                break
        g1, g2 = _small_connected(rng, a), _small_connected(rng, b)
        x, y = rng.randrange(a), rng.randrange(b)
        if kind == "edge":
            # g2's vertices shifted by a; join x -- a + y
            edges = list(g1.edges) + [(a + p, a + q) for p, q in g2.edges] + [(x, a + y)]
            g = Graph(a + b, edges)
            out.append((kind, g, list(range(a)), list(range(a, a + b)), (x, a + y)))
        else:
            # identify g2's vertex y with g1's vertex x
            shift = {q: (x if q == y else a + q - (1 if q > y else 0)) for q in range(b)}
            edges = list(g1.edges) + [(shift[p], shift[q]) for p, q in g2.edges]
            g = Graph(a + b - 1, edges)
            out.append((kind, g, list(range(a)), sorted(shift.values()), x))
    return out


def _induced(g: Graph, vs: list[int]) -> tuple[Graph, list[int]]:
    sub = {v: [w for w in g.adj[v] if w in set(vs)] for v in vs}
    return Graph.from_adjacency(sub)


def _lift(c: ViColoring, labels: list[int]) -> ViColoring:
    return c.relabeled({i: v for i, v in enumerate(labels)})


def _composition_one(case) -> tuple:
    kind, g, p1, p2, join = case
    if kind == "edge":
        u, v = join
        h1, l1 = _induced(g, p1 + [v])
        h2, l2 = _induced(g, p2 + [u])
        rows = []
        for s in (None, 1):
            k1, w1 = chi_vi(h1, s=s)
            k2, w2 = chi_vi(h2, s=s)
            merged = compose_cut_edge(g, (u, v), _lift(w1, l1), _lift(w2, l2))
            kg, _ = chi_vi(g, s=s)
            ok = is_proper(g, merged, k=max(k1, k2), s=s) and kg == max(k1, k2)
            rows.append(ok)
        return (kind, g.n, g.edges, all(rows))
    v = join
    h1, l1 = _induced(g, p1)
    h2, l2 = _induced(g, p2)
    k1, w1 = chi_vi(h1, s=1)
    k2, w2 = chi_vi(h2, s=1)
    formula = max(k1, k2, g.degree(v) + 2)
    merged = compose_cut_vertex(g, v, _lift(w1, l1), _lift(w2, l2))
    kg, _ = chi_vi(g, s=1)
    ok = is_proper(g, merged, k=formula, s=1) and kg == formula
    return (kind, g.n, g.edges, ok)


def check_composition(count: int = 50, jobs: int = 1) -> Row:
    t = time.time()
    res = _pmap(_composition_one, composition_cases(count), jobs)
    bad = [r for r in res if not r[3]]
    edges = sum(1 for r in res if r[0] == "edge")
    detail = f"{len(res) - len(bad)}/{len(res)} merges verify and match exact values ({edges} cut edges, {len(res) - edges} cut vertices)"
    return Row(9, "cut edge / cut vertex composition", not bad, detail, time.time() - t, bad)


# --- 10: degeneracy greedy --------------------------------------------------


def degenerate_graphs(count: int = 100) -> list[Graph]:
    def make(rng, i, seed):
        return GenSpec(n=rng.randint(5, 120), delta_max=2 + i % 7, two_connected=bool(seed % 2), seed=seed)

    return _draw(count, make, random.Random(5), 5000)


def _degenerate_one(g: Graph):
    c = color_degenerate(g, 2)
    rep = verify(g, c)
    return (g.n, g.max_degree, c.k, rep.valid and rep.max_spread <= 2 and c.k <= g.max_degree + 4)


def check_degenerate(count: int = 100, jobs: int = 1) -> Row:
    t = time.time()
    res = _pmap(_degenerate_one, degenerate_graphs(count), jobs)
    bad = [r for r in res if not r[3]]
    detail = f"{len(res) - len(bad)}/{len(res)} within Δ+4 colors and spread 2"
    return Row(10, "degeneracy greedy, k = 2", not bad, detail, time.time() - t, bad)


def run_all(jobs: int = 1, quick: bool = False) -> list[Row]:
    """All ten rows; ``quick`` shrinks the random and enumerated corpora."""
    w = Witnesses()
    rows = [check_cycles(w), check_complete(w)]
    rows.append(check_power_identity(w, max_n=5 if quick else 7, jobs=jobs))
    rows.append(check_fixtures())
    rows.append(check_outerplanar_bound(50 if quick else 500, jobs=jobs))
    rows.append(check_girth_regimes(20 if quick else 200, jobs=jobs))
    rows.append(check_subcubic_tightness(6 if quick else 8, jobs=jobs))
    rows.append(check_spread_lemma(w))
    rows.append(check_composition(10 if quick else 50, jobs=jobs))
    rows.append(check_degenerate(20 if quick else 100, jobs=jobs))
    return rows

