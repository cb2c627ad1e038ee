"""Command-line interface.

Subcommands:
    generate   write random study elements (JSON drawings, optional SVG)
    metrics    evaluate the full aesthetic catalog on a drawing file
    optimize   anneal a layout for a graph against a weights file
    render     render a drawing file to SVG
    analyze    compute usage/reproducibility reports from session exports
    serve      run the HTTP service

The data directory for `serve` comes from --data-dir or the AESGRID_DATA
environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import AnalysisWorkspace, render_usage_table
from .catalog import catalog
from .generator import GeneratorParams, generate_element_set
from .metrics import evaluate_all
from .model import Drawing, Graph, drawing_hash
from .optimizer import AnnealConfig, Objective, optimize_layout
from .render import render_svg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aesgrid", description=__doc__)
    parser.add_argument("--version", action="version", version=f"aesgrid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate random study elements")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=12)
    gen.add_argument("--min-edges", type=int, default=5)
    gen.add_argument("--max-edges", type=int, default=69)
    gen.add_argument("--nodes", type=int, nargs=2, default=(4, 40), metavar=("LO", "HI"))
    gen.add_argument("--max-curvature", type=float, default=0.8)
    gen.add_argument("--out", type=Path, default=Path("elements"))
    gen.add_argument("--svg", action="store_true", help="also render each element to SVG")

    met = sub.add_parser("metrics", help="evaluate all catalog aesthetics on a drawing")
    met.add_argument("drawing", type=Path)
    met.add_argument("--json", action="store_true", help="emit the raw metric vector as JSON")

    opt = sub.add_parser("optimize", help="optimize a layout for a graph")
    opt.add_argument("--graph", type=Path, required=True, help="graph or drawing JSON file")
    opt.add_argument("--weights", type=Path, help="JSON {metric_id: weight}; default: evaluated set")
    opt.add_argument("--seed", type=int, default=0)
    opt.add_argument("--iterations", type=int, default=20_000)
    opt.add_argument("--temperature", type=float, default=0.1)
    opt.add_argument("--cooling", type=float, default=0.9997)
    opt.add_argument("--out", type=Path, required=True, help="optimized drawing JSON")
    opt.add_argument("--svg", type=Path, help="also render the result to this SVG file")
    opt.add_argument("--trace", type=Path, help="write the best-value trace as JSON")

    ren = sub.add_parser("render", help="render a drawing file to SVG")
    ren.add_argument("drawing", type=Path)
    ren.add_argument("--out", type=Path, help="output file (default: stdout)")

    ana = sub.add_parser("analyze", help="reports over session exports")
    ana.add_argument("exports", type=Path, nargs="+", help="session export JSON files")
    ana.add_argument("--tags", type=Path, help='JSON {"tags": [...], "mappings": [...]}')
    ana.add_argument(
        "--report",
        choices=("usage", "reproducibility", "categories"),
        default="usage",
    )
    ana.add_argument("--analyst", default="primary")

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)
    srv.add_argument("--data-dir", type=Path, default=None)

    return parser


def _cmd_generate(args) -> int:
    params = GeneratorParams(
        seed=args.seed,
        min_edges=args.min_edges,
        max_edges=args.max_edges,
        node_count_range=tuple(args.nodes),
        max_curvature=args.max_curvature,
    )
    drawings = generate_element_set(params, args.count)
    args.out.mkdir(parents=True, exist_ok=True)
    for i, drawing in enumerate(drawings):
        stem = f"element-{i:02d}-{drawing_hash(drawing)}"
        (args.out / f"{stem}.json").write_text(drawing.to_json())
        if args.svg:
            (args.out / f"{stem}.svg").write_text(render_svg(drawing))
    print(f"wrote {len(drawings)} elements to {args.out}")
    return 0


def _cmd_metrics(args) -> int:
    drawing = Drawing.from_json(args.drawing.read_text())
    vector = evaluate_all(drawing)
    if args.json:
        print(json.dumps(vector.to_dict(), indent=2, sort_keys=True))
        return 0
    print(f"drawing {vector.drawing_hash}")
    name_width = max(len(e.id.value) for e in catalog())
    for result in vector:
        if result.defined:
            print(
                f"{result.id.value.ljust(name_width)}  raw={result.raw:14.4f}  "
                f"score={result.score:6.4f}"
            )
        else:
            print(f"{result.id.value.ljust(name_width)}  (undefined)")
    return 0


def _load_graph(path: Path) -> Graph:
    data = json.loads(path.read_text())
    if "graph" in data:  # a full drawing file also works
        data = data["graph"]
    return Graph.from_dict(data)


def _cmd_optimize(args) -> int:
    graph = _load_graph(args.graph)
    if args.weights:
        objective = Objective.from_dict({"weights": json.loads(args.weights.read_text())})
    else:
        objective = Objective.default()
    config = AnnealConfig(
        seed=args.seed,
        max_iterations=args.iterations,
        initial_temperature=args.temperature,
        cooling_factor=args.cooling,
    )
    result = optimize_layout(graph, objective, config)
    args.out.write_text(result.drawing.to_json())
    if args.svg:
        args.svg.write_text(render_svg(result.drawing))
    if args.trace:
        args.trace.write_text(json.dumps(list(result.trace)))
    crossings = evaluate_all(result.drawing)["number_of_edge_crossings"]
    print(
        f"objective {result.value:.4f} after {len(result.trace)} iterations; "
        f"crossings {int(crossings.raw)}"
    )
    return 0


def _cmd_render(args) -> int:
    drawing = Drawing.from_json(args.drawing.read_text())
    svg = render_svg(drawing)
    if args.out:
        args.out.write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_analyze(args) -> int:
    workspace = AnalysisWorkspace()
    for path in args.exports:
        workspace.add_session_export(json.loads(path.read_text()))
    if args.tags:
        spec = json.loads(args.tags.read_text())
        for tag in spec.get("tags", []):
            workspace.tag_construct(
                tag["construct"], tag["category"], tag.get("analyst", args.analyst)
            )
        for mapping in spec.get("mappings", []):
            workspace.map_construct(
                mapping["construct"], mapping["aesthetic"], mapping.get("analyst", args.analyst)
            )
    if args.report == "usage":
        print(render_usage_table(workspace.usage_report(analyst=args.analyst)), end="")
    elif args.report == "reproducibility":
        report = workspace.reproducibility_report(analyst=args.analyst)
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(json.dumps(workspace.category_distribution(args.analyst), indent=2, sort_keys=True))
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    data_dir = args.data_dir or os.environ.get("AESGRID_DATA")
    if not data_dir:
        raise SystemExit("no data directory: pass --data-dir or set AESGRID_DATA")
    serve(data_dir, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "metrics": _cmd_metrics,
    "optimize": _cmd_optimize,
    "render": _cmd_render,
    "analyze": _cmd_analyze,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit:
        raise
    except Exception as exc:  # CLI contract: nonzero exit with a message
        print(f"aesgrid {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
