import json
import random
from fractions import Fraction
from importlib.resources import files
from pathlib import Path

import pytest

from trvg import (
    Graph,
    Layout,
    Mode,
    Rect,
    SchemaError,
    complete_multipartite,
    decide_trvg,
    parse_graph,
    parse_layout,
    serialize_graph,
    serialize_layout,
)
from trvg.serialization import coord_from_json, coord_to_json, graph_to_doc, parts_from_doc
from conftest import make_random_layout

GOLDEN = Path(__file__).parent / "golden"


def test_coord_from_json_accepts_exact_forms():
    assert coord_from_json(3, "$") == Fraction(3)
    assert coord_from_json(-2, "$") == Fraction(-2)
    assert coord_from_json("0.5", "$") == Fraction(1, 2)
    assert coord_from_json("-6.35", "$") == Fraction(-127, 20)
    assert coord_from_json("1/3", "$") == Fraction(1, 3)
    assert coord_from_json("-7/2", "$") == Fraction(-7, 2)


def test_coord_from_json_rejects_inexact_forms():
    with pytest.raises(SchemaError, match="float"):
        coord_from_json(0.5, "$")
    with pytest.raises(SchemaError):
        coord_from_json(True, "$")
    for bad in ("", "1.2.3", "1/0", "2/-3", "0x10", "nan", "1e3"):
        with pytest.raises(SchemaError):
            coord_from_json(bad, "$")


def test_coord_to_json_minimal_forms():
    assert coord_to_json(Fraction(3)) == 3
    assert coord_to_json(Fraction(-6)) == -6
    assert coord_to_json(Fraction(1, 2)) == "0.5"
    assert coord_to_json(Fraction(-127, 20)) == "-6.35"
    assert coord_to_json(Fraction(1, 8)) == "0.125"
    assert coord_to_json(Fraction(1, 3)) == "1/3"
    assert coord_to_json(Fraction(-22, 7)) == "-22/7"


def test_coord_round_trip():
    rng = random.Random(53)
    for _ in range(300):
        f = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        assert coord_from_json(coord_to_json(f), "$") == f


def test_parse_layout_round_trip_on_random_layouts():
    rng = random.Random(54)
    for _ in range(40):
        lay = make_random_layout(rng, rng.randint(0, 8))
        assert parse_layout(serialize_layout(lay)) == lay


def test_parse_layout_empty():
    lay = parse_layout('{"mode": "trvg", "rects": []}')
    assert lay.rects == () and lay.mode is Mode.DISJOINT


def test_parse_layout_error_paths():
    cases = [
        ("not json", "$"),
        (json.dumps({"rects": []}), "$.mode"),
        (json.dumps({"mode": "huh", "rects": []}), "$.mode"),
        (json.dumps({"mode": "trvg"}), "$.rects"),
        (json.dumps({"mode": "trvg", "rects": [{"id": "a", "x": [1, 1], "y": [0, 1]}]}),
         "$.rects[0]"),
        (json.dumps({"mode": "trvg", "rects": [{"id": "a", "x": [0, 1.5], "y": [0, 1]}]}),
         "$.rects[0].x[1]"),
        (json.dumps({"mode": "trvg", "rects": [{"id": "a", "x": [0, "2/0"], "y": [0, 1]}]}),
         "$.rects[0].x[1]"),
        (json.dumps({"mode": "trvg", "rects": [{"id": 7, "x": [0, 1], "y": [0, 1]}]}),
         "$.rects[0].id"),
        (json.dumps({"mode": "trvg", "rects": [{"id": "a", "x": [0, 1]}]}),
         "$.rects[0].y"),
        (json.dumps({"mode": "trvg", "rects": [
            {"id": "a", "x": [0, 1], "y": [0, 1]},
            {"id": "a", "x": [2, 3], "y": [0, 1]},
        ]}), "$.rects"),
    ]
    for text, path in cases:
        with pytest.raises(SchemaError) as exc:
            parse_layout(text)
        assert exc.value.path == path, text


def test_zero_width_error_names_the_rectangle():
    doc = {"mode": "trvg", "rects": [{"id": "box7", "x": [1, 1], "y": [0, 1]}]}
    with pytest.raises(SchemaError, match="box7"):
        parse_layout(json.dumps(doc))


def test_parse_graph_round_trip():
    g = complete_multipartite([2, 3])
    assert parse_graph(serialize_graph(g)) == g
    plain = Graph(4, [(0, 2), (1, 3)])
    assert parse_graph(serialize_graph(plain)) == plain


def test_parse_graph_error_paths():
    cases = [
        (json.dumps({"edges": []}), "$.n"),
        (json.dumps({"n": -1, "edges": []}), "$.n"),
        (json.dumps({"n": 2, "edges": [[0, 0]]}), "$.edges[0]"),
        (json.dumps({"n": 2, "edges": [[0, 1], [1, 0]]}), "$.edges[1]"),
        (json.dumps({"n": 2, "edges": [[0, 2]]}), "$.edges[0]"),
        (json.dumps({"n": 2, "edges": [[0]]}), "$.edges[0]"),
        (json.dumps({"n": 2, "edges": [], "labels": ["a"]}), "$.labels"),
        (json.dumps({"n": 2, "edges": [], "parts": [0]}), "$.parts"),
    ]
    for text, path in cases:
        with pytest.raises(SchemaError) as exc:
            parse_graph(text)
        assert exc.value.path == path, text


def test_graph_doc_carries_parts():
    doc = graph_to_doc(complete_multipartite([2, 2]), parts=[0, 0, 1, 1])
    assert doc["parts"] == [0, 0, 1, 1]
    assert parts_from_doc(doc) == [0, 0, 1, 1]
    assert parts_from_doc({"n": 1, "edges": []}) is None


def test_fixture_files_round_trip_byte_identically():
    fixture_dir = files("trvg") / "fixtures"
    names = [
        "fig1_k5.json",
        "fig6a_G.json",
        "fig6b_itrvg.json",
        "fig7a_Gprime.json",
        "graph_Gprime.json",
    ]
    for name in names:
        text = (fixture_dir / name).read_text()
        if "rects" in json.loads(text):
            assert serialize_layout(parse_layout(text)) == text
        else:
            assert serialize_graph(parse_graph(text)) == text


def test_golden_base_layouts_match_search_output():
    for name, parts in (("k33_layout.json", [3, 3]), ("k34_layout.json", [3, 4])):
        golden = (GOLDEN / name).read_text()
        assert serialize_layout(parse_layout(golden)) == golden
        verdict = decide_trvg(complete_multipartite(parts))
        assert serialize_layout(verdict.certificate) == golden


def test_decimal_coordinates_survive_round_trip():
    lay = Layout(
        (
            Rect("a", Fraction("-7.85"), Fraction("-6.35"), Fraction("-3"), Fraction("-1.5")),
            Rect("b", Fraction("1/3"), Fraction("2/3"), Fraction("0.25"), Fraction("0.75")),
        ),
        Mode.INTERSECTING,
    )
    text = serialize_layout(lay)
    assert '"-7.85"' in text and '"1/3"' in text and '"0.75"' in text
    assert parse_layout(text) == lay
    assert serialize_layout(parse_layout(text)) == text
