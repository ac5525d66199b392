"""``vic``: command-line entry point.

Each subcommand parses its arguments, calls one library function and prints
the result.  ``--json`` switches every command to a single JSON object
``{"command", "result", "manifest"}`` on stdout.  In text mode the run
manifest goes to stderr as one ``# manifest`` line.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage or bad
input, 3 resource limit (node budget) reached.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import platform
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Optional

from . import __version__
from .certificates import ForbiddenEmbedding, classify, detect_forbidden
from .checker import NotApplicable, PartialColoring, verify
from .construct import STRATEGIES, ConstructionError, NoApplicableTheorem, Trace, color
from .exact import NodeLimit, chi_vi, default_node_limit
from .formats import (
    FormatError,
    coloring_to_json,
    format_edge_list,
    graph_to_json,
    load_coloring,
    load_graph,
    power_dot,
    save_graph,
)
from .generators import GenSpec, Infeasible, gen_outerplanar
from .graph import Graph, Incidence, three_thirds_power
from .outerplanar import NotOuterplanar, embed

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class RunManifest:
    command: str
    inputs: dict = field(default_factory=dict)  # path -> sha256
    seed: Optional[int] = None
    versions: dict = field(default_factory=dict)
    wall_time: float = 0.0
    summary: Any = None  # deterministic; depends only on the inputs above


def _sha256(path: str) -> Optional[str]:
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError:
        return None


def _versions() -> dict:
    return {"vicolor": __version__, "python": platform.python_version()}


class Outcome:
    """What a command hands back: a JSON-able result, text lines, a summary and an exit code."""

    def __init__(self, result: Any, text: list[str], summary: Any = None, code: int = EXIT_OK):
        self.result = result
        self.text = text
        self.summary = result if summary is None else summary
        self.code = code


# --- serialization helpers ----------------------------------------------------


def _element_json(x) -> Any:
    return {"v": x.vertex, "u": x.other} if isinstance(x, Incidence) else x


def embedding_json(g: Graph) -> dict:
    emb = embed(g)
    return {
        "outer_order": list(emb.outer_order),
        "chords": [list(e) for e in sorted(emb.chords)],
        "faces": [list(f) for f in emb.faces],
    }


def report_json(g: Graph, c, k: Optional[int] = None, s: Optional[int] = None) -> dict:
    rep = verify(g, c)
    ok = rep.valid and (k is None or c.k <= k) and (s is None or rep.max_spread <= s)
    return {
        "valid": ok,
        "proper": rep.valid,
        "colors": c.k,
        "distinct_colors": c.num_colors,
        "max_spread": rep.max_spread,
        "violations": [
            {"first": _element_json(v.first), "second": _element_json(v.second), "reason": v.reason}
            for v in rep.violations
        ],
    }


def certificate_json(cert) -> dict:
    lower = []
    for ev in cert.lower:
        row: dict = {"kind": ev.kind}
        if ev.kind == "forbidden-subgraph":
            row.update(pattern=ev.embedding.pattern, mapping=ev.embedding.as_dict())
        elif ev.kind == "exhausted-search":
            row.update(k=ev.k, nodes=ev.nodes)
        else:
            row.update(k=ev.k)
        lower.append(row)
    return {
        "interval": [cert.lo, cert.hi],
        "tight": cert.tight,
        "max_degree": cert.max_degree,
        "class": cert.vi_class,
        "certificate": cert.kind,
        "lower": lower,
        "upper": {"k": cert.upper.k, "source": cert.upper.source},
    }


def embedding_list_json(found: list[ForbiddenEmbedding]) -> list[dict]:
    return [{"pattern": f.pattern, "mapping": f.as_dict()} for f in found]


def _write_json(path: str, data: Any) -> None:
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


# --- commands -----------------------------------------------------------------


def cmd_embed(args) -> Outcome:
    g = load_graph(args.graph)
    data = embedding_json(g)
    return Outcome(data, [json.dumps(data)])


def cmd_color(args) -> Outcome:
    g = load_graph(args.graph)
    trace = Trace() if args.explain else None
    c = color(g, spread=args.spread, strategy=args.strategy, trace=trace)
    data = coloring_to_json(g, c)
    rep = verify(g, c)
    summary = {"colors": c.k, "max_spread": rep.max_spread, "max_degree": g.max_degree}
    result: dict = {**summary, "coloring": data}
    text = []
    if args.output:
        _write_json(args.output, data)
        text.append(f"wrote {args.output}: {c.k} colors, spread {rep.max_spread}, Δ = {g.max_degree}")
    else:
        text.append(json.dumps(data))
    if trace is not None:
        result["trace"] = trace.steps
        text += [json.dumps(step) for step in trace.steps]
    return Outcome(result, text, summary)


def cmd_exact(args) -> Outcome:
    g = load_graph(args.graph)
    limit = args.node_limit if args.node_limit is not None else default_node_limit()
    k, w = chi_vi(g, s=args.spread, node_limit=limit, max_k=args.max_k)
    data = coloring_to_json(g, w)
    text = [f"chi_vi = {k}" if args.spread is None else f"chi_vi,{args.spread} = {k}"]
    if args.output:
        _write_json(args.output, data)
        text.append(f"witness written to {args.output}")
    else:
        text.append(json.dumps(data))
    return Outcome({"k": k, "spread": args.spread, "witness": data}, text, {"k": k, "spread": args.spread})


def _verify_one(job: tuple) -> tuple:
    graph_path, coloring_path, k, s = job
    g = load_graph(graph_path)
    c = load_coloring(coloring_path)
    return coloring_path, report_json(g, c, k, s)


def cmd_verify(args) -> Outcome:
    jobs = [(args.graph, p, args.k, args.spread) for p in args.coloring]
    if args.jobs > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_verify_one, jobs))
    else:
        rows = [_verify_one(j) for j in jobs]
    text = []
    for path, rep in rows:
        state = "valid" if rep["valid"] else "INVALID"
        text.append(f"{path}: {state}, {rep['colors']} colors, spread {rep['max_spread']}")
        for v in rep["violations"][:20]:
            text.append(f"  {v['reason']}: {v['first']} ~ {v['second']}")
    ok = all(rep["valid"] for _, rep in rows)
    result = rows[0][1] if len(rows) == 1 else {p: r for p, r in rows}
    return Outcome(result, text, code=EXIT_OK if ok else EXIT_MISMATCH)


def cmd_classify(args) -> Outcome:
    g = load_graph(args.graph)
    cert = classify(g, budget=args.budget)
    data = certificate_json(cert)
    cls = f", class {cert.vi_class}" if cert.tight else ""
    text = [f"chi_vi in [{cert.lo}, {cert.hi}]{cls}; certificate: {cert.kind}"]
    return Outcome(data, text, code=EXIT_OK if cert.tight else EXIT_LIMIT)


def cmd_gen(args) -> Outcome:
    spec = GenSpec(
        n=args.n, delta_max=args.delta, girth_min=args.girth, two_connected=args.two_connected, seed=args.seed
    )
    g = gen_outerplanar(spec)
    data = graph_to_json(g)
    text = []
    if args.output:
        save_graph(g, args.output)
        text.append(f"wrote {args.output}: n = {g.n}, m = {g.m}, Δ = {g.max_degree}")
    else:
        text.append(json.dumps(data))
    return Outcome(data, text, {"n": g.n, "m": g.m, "max_degree": g.max_degree})


def cmd_power(args) -> Outcome:
    g = load_graph(args.graph)
    h, emap = three_thirds_power(g)
    labels = [_element_json(x) for x in emap.to_element]
    data = {"n": h.n, "edges": [list(e) for e in h.edges], "elements": labels}
    text = [power_dot(g)] if args.dot else [format_edge_list(h).rstrip("\n")]
    return Outcome(data, text, {"n": h.n, "m": h.m})


def cmd_detect(args) -> Outcome:
    g = load_graph(args.graph)
    found = detect_forbidden(g, first_only=args.first)
    data = embedding_list_json(found)
    if not found:
        text = ["no forbidden subcubic pattern" + ("" if g.max_degree == 3 else f" (Δ = {g.max_degree}, not subcubic)")]
    else:
        text = [f"{f['pattern']}: {f['mapping']}" for f in data]
    return Outcome(data, text, {"found": len(found), "patterns": sorted({f.pattern for f in found})})


def cmd_reproduce(args) -> Outcome:
    from .reproduce import run_all

    rows = run_all(jobs=args.jobs, quick=args.quick)
    data = [
        {"criterion": r.criterion, "title": r.title, "passed": r.passed, "detail": r.detail, "failures": r.failures[:5]}
        for r in rows
    ]
    text = [r.line() for r in rows]
    passed = sum(r.passed for r in rows)
    text.append(f"{passed}/{len(rows)} criteria pass")
    summary = [{"criterion": r.criterion, "passed": r.passed, "detail": r.detail} for r in rows]
    return Outcome(data, text, summary, EXIT_OK if passed == len(rows) else EXIT_MISMATCH)


# --- parser -------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object with result and manifest")

    p = argparse.ArgumentParser(prog="vic", description="vi-simultaneous colorings of graphs")
    p.add_argument("--version", action="version", version=f"vic {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("embed", parents=[common], help="outerplanar embedding: outer order, chords, faces")
    s.add_argument("graph")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("color", parents=[common], help="constructive coloring")
    s.add_argument("graph")
    s.add_argument("--spread", type=int, choices=(1, 2), default=2)
    s.add_argument("--strategy", choices=STRATEGIES, default="auto")
    s.add_argument("--explain", action="store_true", help="also print the reduction trace")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("exact", parents=[common], help="exact chi_vi with a witness")
    s.add_argument("graph")
    s.add_argument("--spread", type=_positive)
    s.add_argument("--max-k", type=_positive)
    s.add_argument("--node-limit", type=_positive, help="search nodes per decision (default: VIC_NODE_LIMIT)")
    s.add_argument("-o", "--output", help="witness JSON path")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("verify", parents=[common], help="check colorings; exit 1 if any is invalid")
    s.add_argument("graph")
    s.add_argument("coloring", nargs="+")
    s.add_argument("--k", type=_positive, help="also require at most k colors")
    s.add_argument("--spread", type=_positive, help="also require spread at most s")
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", parents=[common], help="interval for chi_vi with certificates")
    s.add_argument("graph")
    s.add_argument("--budget", type=_positive, help="search nodes per decision (default: VIC_NODE_LIMIT)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("gen", parents=[common], help="random outerplanar graph")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--delta", type=_positive, default=3)
    s.add_argument("--girth", type=int, default=3)
    s.add_argument("--two-connected", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", help=".json for JSON, anything else for an edge list")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("power", parents=[common], help="the 3/3-power graph")
    s.add_argument("graph")
    s.add_argument("--dot", action="store_true", help="DOT instead of an edge list")
    s.set_defaults(func=cmd_power)

    s = sub.add_parser("detect", parents=[common], help="forbidden subcubic patterns G1..G4")
    s.add_argument("graph")
    s.add_argument("--first", action="store_true", help="stop at the first embedding")
    s.set_defaults(func=cmd_detect)

    s = sub.add_parser("reproduce", parents=[common], help="run the acceptance suite")
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--quick", action="store_true", help="smaller corpora")
    s.set_defaults(func=cmd_reproduce)
    return p


def _manifest(args, summary: Any, seconds: float) -> RunManifest:
    inputs = {}
    for name in ("graph",):
        path = getattr(args, name, None)
        if path:
            inputs[path] = _sha256(path)
    for path in getattr(args, "coloring", None) or []:
        inputs[path] = _sha256(path)
    return RunManifest(
        command=args.command,
        inputs=inputs,
        seed=getattr(args, "seed", None),
        versions=_versions(),
        wall_time=round(seconds, 4),
        summary=summary,
    )


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    start = time.perf_counter()
    error: Optional[str] = None
    try:
        out = args.func(args)
    except NodeLimit as exc:
        error, code = str(exc), EXIT_LIMIT
    except (FormatError, NotOuterplanar, NoApplicableTheorem, Infeasible, NotApplicable, PartialColoring) as exc:
        error, code = f"{type(exc).__name__}: {exc}", EXIT_USAGE
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        error, code = f"{type(exc).__name__}: {exc}", EXIT_USAGE
    except ConstructionError as exc:
        error, code = f"ConstructionError: {exc}", EXIT_MISMATCH
    if error is not None:
        out = Outcome(None, [], {"error": error}, code)
    manifest = _manifest(args, out.summary, time.perf_counter() - start)
    if args.json:
        payload = {"command": args.command, "exit_code": out.code, "result": out.result, "manifest": asdict(manifest)}
        if error is not None:
            payload["error"] = error
        print(json.dumps(payload))
    else:
        for line in out.text:
            print(line)
        if error is not None:
            print(f"vic {args.command}: {error}", file=sys.stderr)
        print("# manifest " + json.dumps(asdict(manifest)), file=sys.stderr)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
