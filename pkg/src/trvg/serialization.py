"""Document formats for layouts and graphs.

Coordinates stay exact end to end: JSON integers, exact decimal strings
("1.25") or rational strings ("1/3").  Serialization is canonical, so
parse -> serialize is byte-identical on files produced here.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DuplicateId, InvalidRect, SchemaError
from .geometry import Layout, Mode, Rect
from .graphs import Graph

_DECIMAL_RE = re.compile(r"-?\d+(\.\d+)?")
_RATIONAL_RE = re.compile(r"-?\d+/[1-9]\d*")


def parse_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from None


def coord_from_json(value: object, path: str) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(path, "coordinate must be an integer or a string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if _DECIMAL_RE.fullmatch(value) or _RATIONAL_RE.fullmatch(value):
            return Fraction(value)
        raise SchemaError(path, f"not an exact decimal or rational: {value!r}")
    if isinstance(value, float):
        raise SchemaError(path, "float coordinates are inexact; use a string")
    raise SchemaError(path, "coordinate must be an integer or a string")


def coord_to_json(value: Fraction) -> Union[int, str]:
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    den = value.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    shift = max(twos, fives)
    scaled = abs(value.numerator) * 10**shift // value.denominator
    digits = str(scaled).rjust(shift + 1, "0")
    sign = "-" if value.numerator < 0 else ""
    return f"{sign}{digits[:-shift]}.{digits[-shift:]}"


def _require(doc: object, key: str, path: str) -> object:
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    if key not in doc:
        raise SchemaError(f"{path}.{key}", "missing")
    return doc[key]


def _interval_from_json(value: object, path: str) -> tuple[Fraction, Fraction]:
    if not isinstance(value, list) or len(value) != 2:
        raise SchemaError(path, "expected [lo, hi]")
    lo = coord_from_json(value[0], f"{path}[0]")
    hi = coord_from_json(value[1], f"{path}[1]")
    return lo, hi


def layout_from_doc(doc: object, path: str = "$") -> Layout:
    mode_raw = _require(doc, "mode", path)
    try:
        mode = Mode(mode_raw)
    except ValueError:
        raise SchemaError(f"{path}.mode", f"expected 'trvg' or 'itrvg', got {mode_raw!r}") from None
    rects_raw = _require(doc, "rects", path)
    if not isinstance(rects_raw, list):
        raise SchemaError(f"{path}.rects", "expected a list")
    rects = []
    for idx, item in enumerate(rects_raw):
        rpath = f"{path}.rects[{idx}]"
        rid = _require(item, "id", rpath)
        if not isinstance(rid, str) or not rid:
            raise SchemaError(f"{rpath}.id", "expected a nonempty string")
        x_lo, x_hi = _interval_from_json(_require(item, "x", rpath), f"{rpath}.x")
        y_lo, y_hi = _interval_from_json(_require(item, "y", rpath), f"{rpath}.y")
        try:
            rects.append(Rect(rid, x_lo, x_hi, y_lo, y_hi))
        except InvalidRect as exc:
            raise SchemaError(rpath, str(exc)) from None
    try:
        return Layout(rects, mode)
    except DuplicateId as exc:
        raise SchemaError(f"{path}.rects", str(exc)) from None


def layout_to_doc(layout: Layout) -> dict:
    return {
        "mode": layout.mode.value,
        "rects": [
            {
                "id": r.id,
                "x": [coord_to_json(r.x_lo), coord_to_json(r.x_hi)],
                "y": [coord_to_json(r.y_lo), coord_to_json(r.y_hi)],
            }
            for r in layout.rects
        ],
    }


def graph_from_doc(doc: object, path: str = "$") -> Graph:
    n = _require(doc, "n", path)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError(f"{path}.n", "expected a nonnegative integer")
    edges_raw = _require(doc, "edges", path)
    if not isinstance(edges_raw, list):
        raise SchemaError(f"{path}.edges", "expected a list")
    seen = set()
    edges = []
    for idx, item in enumerate(edges_raw):
        epath = f"{path}.edges[{idx}]"
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(e, int) and not isinstance(e, bool) for e in item)
        ):
            raise SchemaError(epath, "expected [u, v] with integer endpoints")
        u, v = item
        if not (0 <= u < n and 0 <= v < n):
            raise SchemaError(epath, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise SchemaError(epath, "self loops are not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise SchemaError(epath, f"duplicate edge {list(key)}")
        seen.add(key)
        edges.append(key)
    labels = None
    if isinstance(doc, dict) and doc.get("labels") is not None:
        labels_raw = doc["labels"]
        if not isinstance(labels_raw, list) or len(labels_raw) != n:
            raise SchemaError(f"{path}.labels", f"expected {n} strings")
        for idx, text in enumerate(labels_raw):
            if not isinstance(text, str) or not text:
                raise SchemaError(f"{path}.labels[{idx}]", "expected a nonempty string")
        labels = tuple(labels_raw)
    parts_from_doc(doc, path, n)
    return Graph(n, edges, labels)


def parts_from_doc(
    doc: object, path: str = "$", n: Optional[int] = None
) -> Optional[list[int]]:
    if not isinstance(doc, dict) or doc.get("parts") is None:
        return None
    parts_raw = doc["parts"]
    if not isinstance(parts_raw, list) or (n is not None and len(parts_raw) != n):
        raise SchemaError(f"{path}.parts", "expected one part index per vertex")
    for idx, p in enumerate(parts_raw):
        if not isinstance(p, int) or isinstance(p, bool) or p < 0:
            raise SchemaError(f"{path}.parts[{idx}]", "expected a nonnegative integer")
    return list(parts_raw)


def graph_to_doc(g: Graph, parts: Optional[Sequence[int]] = None) -> dict:
    doc: dict = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    if parts is not None:
        doc["parts"] = list(parts)
    return doc


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def serialize_layout(layout: Layout) -> str:
    return _dump(layout_to_doc(layout))


def parse_layout(text: str) -> Layout:
    return layout_from_doc(parse_json(text))


def serialize_graph(g: Graph, parts: Optional[Sequence[int]] = None) -> str:
    return _dump(graph_to_doc(g, parts))


def parse_graph(text: str) -> Graph:
    return graph_from_doc(parse_json(text))
