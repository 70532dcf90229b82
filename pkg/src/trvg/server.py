"""HTTP service exposing extraction, verification, decision and rendering.

Request and response bodies are the same JSON documents the CLI reads and
writes.  Errors come back as {"error": <kind>, "detail": <message>} with
status 400 for malformed documents, 404 for unknown fixtures and 422 for
well-formed input that violates a semantic rule.
"""

from __future__ import annotations

from fastapi import Body, FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .errors import SchemaError, TrvgError, UnknownFixture
from .families import (
    classify_bipartite,
    classify_cycle_square_complement,
    classify_multipartite,
    fixture,
    status_label,
)
from .geometry import Layout
from .graphs import Graph
from .represent import Budget, Screens, decide_itrvg, decide_trvg, extract, verify
from .serialization import graph_from_doc, graph_to_doc, layout_from_doc, layout_to_doc
from .svg import render_svg


def _snake(name: str) -> str:
    out = []
    for i, ch in enumerate(name):
        if ch.isupper() and i > 0:
            out.append("_")
        out.append(ch.lower())
    return "".join(out)


def _require(payload: object, key: str) -> object:
    if not isinstance(payload, dict):
        raise SchemaError("$", "expected an object")
    if key not in payload:
        raise SchemaError(f"$.{key}", "missing")
    return payload[key]


def _budget_from_payload(payload: dict) -> Budget:
    raw = payload.get("budget")
    if raw is None:
        return Budget()
    if not isinstance(raw, dict):
        raise SchemaError("$.budget", "expected an object")
    kwargs = {}
    if "max_nodes" in raw:
        if not isinstance(raw["max_nodes"], int) or isinstance(raw["max_nodes"], bool):
            raise SchemaError("$.budget.max_nodes", "expected an integer")
        kwargs["max_nodes"] = raw["max_nodes"]
    if "max_seconds" in raw:
        if not isinstance(raw["max_seconds"], (int, float)) or isinstance(
            raw["max_seconds"], bool
        ):
            raise SchemaError("$.budget.max_seconds", "expected a number")
        kwargs["max_seconds"] = float(raw["max_seconds"])
    try:
        return Budget(**kwargs)
    except ValueError as exc:
        raise SchemaError("$.budget", str(exc)) from None


def _loc_path(loc: tuple) -> str:
    out = "$"
    for part in loc:
        if part == "body":
            continue
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def _int_list(text: str, param: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise SchemaError(f"$.{param}", f"expected a comma separated integer list") from None


def create_app() -> FastAPI:
    app = FastAPI(title="transparent rectangle visibility service", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["null"],
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _invalid_request(request, exc: RequestValidationError):
        errors = exc.errors()
        first = errors[0] if errors else {"loc": (), "msg": "invalid request"}
        detail = f"{_loc_path(first.get('loc', ()))}: {first.get('msg', 'invalid request')}"
        return JSONResponse(
            status_code=400, content={"error": "schema_error", "detail": detail}
        )

    @app.exception_handler(TrvgError)
    async def _trvg_error(request, exc: TrvgError):
        status = 422
        if isinstance(exc, SchemaError):
            status = 400
        elif isinstance(exc, UnknownFixture):
            status = 404
        return JSONResponse(
            status_code=status,
            content={"error": _snake(type(exc).__name__), "detail": str(exc)},
        )

    @app.post("/api/extract")
    def api_extract(doc: dict = Body(...)):
        layout = layout_from_doc(doc)
        return graph_to_doc(extract(layout))

    @app.post("/api/verify")
    def api_verify(payload: dict = Body(...)):
        layout = layout_from_doc(_require(payload, "layout"), "$.layout")
        target = graph_from_doc(_require(payload, "graph"), "$.graph")
        mapping_raw = payload.get("mapping", "identity")
        if mapping_raw == "identity":
            mapping = "identity"
        elif mapping_raw == "search":
            mapping = None
        elif isinstance(mapping_raw, dict) and all(
            isinstance(k, str) and isinstance(v, int) and not isinstance(v, bool)
            for k, v in mapping_raw.items()
        ):
            mapping = mapping_raw
        else:
            raise SchemaError("$.mapping", "expected 'identity', 'search' or {id: vertex}")
        report = verify(layout, target, mapping)
        return report.to_json_dict()

    @app.post("/api/decide")
    def api_decide(payload: dict = Body(...)):
        g = graph_from_doc(_require(payload, "graph"), "$.graph")
        mode = payload.get("mode", "trvg")
        if mode not in ("trvg", "itrvg"):
            raise SchemaError("$.mode", f"expected 'trvg' or 'itrvg', got {mode!r}")
        budget = _budget_from_payload(payload)
        if mode == "itrvg":
            verdict = decide_itrvg(g, budget)
        else:
            screens = Screens(True, True) if payload.get("screens") else Screens()
            verdict = decide_trvg(g, budget, screens)
        return verdict.to_json_dict()

    @app.get("/api/fixture/{name}")
    def api_fixture(name: str):
        obj = fixture(name)
        if isinstance(obj, Layout):
            return layout_to_doc(obj)
        assert isinstance(obj, Graph)
        return graph_to_doc(obj)

    @app.post("/api/render")
    def api_render(payload: dict = Body(...)):
        layout = layout_from_doc(_require(payload, "layout"), "$.layout")
        options = payload.get("options") or {}
        if not isinstance(options, dict):
            raise SchemaError("$.options", "expected an object")
        strips_raw = options.get("strips")
        if strips_raw is not None and (
            not isinstance(strips_raw, list)
            or not all(isinstance(s, str) for s in strips_raw)
        ):
            raise SchemaError("$.options.strips", "expected a list of rectangle ids")
        scale = options.get("scale", 40)
        if not isinstance(scale, int) or isinstance(scale, bool) or scale <= 0:
            raise SchemaError("$.options.scale", "expected a positive integer")
        svg = render_svg(
            layout,
            show_edges=bool(options.get("edges", False)),
            strip_ids=strips_raw,
            show_bbox=bool(options.get("bbox", False)),
            scale=scale,
        )
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/api/classify")
    def api_classify(
        bipartite: str | None = Query(default=None),
        multipartite: str | None = Query(default=None),
        dn2: str | None = Query(default=None),
    ):
        given = [x for x in (bipartite, multipartite, dn2) if x is not None]
        if len(given) != 1:
            raise SchemaError("$", "pass exactly one of bipartite, multipartite, dn2")
        if bipartite is not None:
            values = _int_list(bipartite, "bipartite")
            if len(values) != 2:
                raise SchemaError("$.bipartite", "expected two part sizes")
            yes = classify_bipartite(values[0], values[1])
            return {"family": "bipartite", "args": values, "status": status_label(yes)}
        if multipartite is not None:
            values = _int_list(multipartite, "multipartite")
            yes = classify_multipartite(values)
            return {
                "family": "multipartite",
                "args": values,
                "status": status_label(yes),
            }
        values = _int_list(dn2, "dn2")
        if len(values) != 1:
            raise SchemaError("$.dn2", "expected a single integer")
        status = classify_cycle_square_complement(values[0])
        return {
            "family": "cycle-square-complement",
            "args": values,
            "status": status_label(status),
        }

    return app
