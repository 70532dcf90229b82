"""Command line interface.

Exit codes: 0 for success / Yes / Within, 1 for No / Violated / failed
verification, 2 for Unknown (budget ran out), 64 for usage errors, 65 for
unusable input data.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import NotRepresentable, SchemaError, TrvgError
from .families import (
    BoundCheck,
    KnownStatus,
    bound_check,
    classify_bipartite,
    classify_cycle_square_complement,
    classify_multipartite,
    construct_multipartite,
    fixture,
    status_label,
)
from .geometry import Layout
from .graphs import Graph, greedy_coloring
from .represent import Budget, Outcome, Screens, decide_itrvg, decide_trvg, extract, verify
from .serialization import (
    graph_from_doc,
    parse_json,
    parts_from_doc,
    serialize_graph,
    serialize_layout,
)
from .serialization import layout_from_doc
from .svg import render_svg

DEFAULT_BUDGET_NODES = 10**8
BUDGET_ENV = "TRVG_DEFAULT_BUDGET_NODES"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(64)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_layout(path: str) -> Layout:
    return layout_from_doc(parse_json(_read_text(path)))


def _load_graph(path: str) -> Graph:
    return graph_from_doc(parse_json(_read_text(path)))


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _UsageError(f"expected a comma separated integer list, got {text!r}") from None


def _cmd_extract(args) -> int:
    layout = _load_layout(args.input)
    _write_text(args.output, serialize_graph(extract(layout)))
    return 0


def _cmd_verify(args) -> int:
    layout = _load_layout(args.input)
    target = _load_graph(args.graph)
    mapping = "identity" if args.mapping == "identity" else None
    report = verify(layout, target, mapping)
    sys.stdout.write(json.dumps(report.to_json_dict(), separators=(",", ":")) + "\n")
    return 0 if report.ok else 1


def _budget_from_args(args) -> Budget:
    nodes = args.budget_nodes
    if nodes is None:
        nodes = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET_NODES))
    return Budget(max_nodes=nodes, max_seconds=args.timeout)


def _cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    budget = _budget_from_args(args)
    if args.mode == "itrvg":
        verdict = decide_itrvg(g, budget)
    else:
        screens = Screens(True, True) if args.screens else Screens()
        verdict = decide_trvg(g, budget, screens)
    sys.stdout.write(json.dumps(verdict.to_json_dict(), separators=(",", ":")) + "\n")
    if args.output and verdict.certificate is not None:
        _write_text(args.output, serialize_layout(verdict.certificate))
    if verdict.outcome is Outcome.YES:
        return 0
    if verdict.outcome is Outcome.NO:
        return 1
    return 2


def _cmd_construct(args) -> int:
    parts = _int_list(args.multipartite)
    try:
        layout = construct_multipartite(parts)
    except NotRepresentable as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    _write_text(args.output, serialize_layout(layout))
    if args.svg:
        _write_text(args.svg, render_svg(layout, show_edges=True))
    return 0


def _cmd_classify(args) -> int:
    if args.bipartite is not None:
        values = _int_list(args.bipartite)
        if len(values) != 2:
            raise _UsageError("expected exactly two part sizes")
        p, q = values
        yes = classify_bipartite(p, q)
        doc = {"family": "bipartite", "args": [p, q], "status": status_label(yes)}
        code = 0 if yes else 1
    elif args.multipartite is not None:
        parts = _int_list(args.multipartite)
        yes = classify_multipartite(parts)
        doc = {"family": "multipartite", "args": parts, "status": status_label(yes)}
        code = 0 if yes else 1
    else:
        try:
            n = int(args.dn2)
        except ValueError:
            raise _UsageError(f"expected an integer, got {args.dn2!r}") from None
        status = classify_cycle_square_complement(n)
        doc = {
            "family": "cycle-square-complement",
            "args": [n],
            "status": status_label(status),
        }
        code = {
            KnownStatus.KNOWN_YES: 0,
            KnownStatus.KNOWN_NO: 1,
            KnownStatus.OPEN: 2,
        }[status]
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return code


def _cmd_bound(args) -> int:
    text = _read_text(args.graph)
    doc = parse_json(text)
    g = graph_from_doc(doc)
    if args.parts is None:
        parts = parts_from_doc(doc)
        if parts is None:
            parts = greedy_coloring(g)
    elif args.parts == "auto":
        parts = greedy_coloring(g)
    else:
        parts_doc = parse_json(_read_text(args.parts))
        if isinstance(parts_doc, dict):
            parts = parts_from_doc(parts_doc)
            if parts is None:
                raise SchemaError("$.parts", "parts file has no parts field")
        else:
            parts = parts_from_doc({"parts": parts_doc})
    report: BoundCheck = bound_check(g, parts)
    sys.stdout.write(json.dumps(report.to_json_dict(), separators=(",", ":")) + "\n")
    return 0 if report.within else 1


def _cmd_fixture(args) -> int:
    obj = fixture(args.name)
    if isinstance(obj, Layout):
        _write_text(args.output, serialize_layout(obj))
    else:
        _write_text(args.output, serialize_graph(obj))
    return 0


def _cmd_render(args) -> int:
    layout = _load_layout(args.input)
    strip_ids = args.strips.split(",") if args.strips else None
    svg = render_svg(
        layout,
        show_edges=args.edges,
        strip_ids=strip_ids,
        show_bbox=args.bbox,
        scale=args.scale,
    )
    _write_text(args.output, svg)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trvg", description="transparent rectangle visibility toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", parents=[], help="visibility graph of a layout")
    p.add_argument("-i", "--input", required=True, help="layout JSON path, - for stdin")
    p.add_argument("-o", "--output", default=None, help="graph JSON path, default stdout")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("verify", help="check a layout against a target graph")
    p.add_argument("-i", "--input", required=True, help="layout JSON path")
    p.add_argument("-g", "--graph", required=True, help="target graph JSON path")
    p.add_argument("--mapping", choices=("identity", "search"), default="identity")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("decide", help="decide representability of a graph")
    p.add_argument("-g", "--graph", required=True, help="graph JSON path")
    p.add_argument("--mode", choices=("trvg", "itrvg"), default="trvg")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--timeout", type=float, default=60.0, help="seconds")
    p.add_argument("--screens", action="store_true", help="try refutation screens first")
    p.add_argument("-o", "--output", default=None, help="certificate layout path on Yes")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("construct", help="build a layout for a known family")
    p.add_argument("--multipartite", required=True, metavar="A,B,...",
                   help="nondecreasing part sizes")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--svg", default=None, help="also render to this SVG path")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("classify", help="closed-form representability status")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bipartite", metavar="P,Q")
    group.add_argument("--multipartite", metavar="A,B,...")
    group.add_argument("--dn2", metavar="N", help="complement of the squared n-cycle")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bound", help="k-partite edge bound check")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--parts", default=None, metavar="FILE|auto",
                   help="JSON file with a part index per vertex, or 'auto' for a "
                        "greedy coloring; default: the graph file's parts field, "
                        "else auto")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("fixture", help="write a named example document")
    p.add_argument("name")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_fixture)

    p = sub.add_parser("render", help="render a layout to SVG")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--edges", action="store_true")
    p.add_argument("--strips", default=None, metavar="ID,ID,...")
    p.add_argument("--bbox", action="store_true")
    p.add_argument("--scale", type=int, default=40)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 64
    try:
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 64
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 65
    except TrvgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 65


if __name__ == "__main__":
    sys.exit(main())
