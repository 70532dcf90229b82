"""End to end checks of the HTTP service against the library it wraps."""

import pytest
from fastapi.testclient import TestClient

from trvg import (
    Budget,
    Screens,
    decide_itrvg,
    decide_trvg,
    extract,
    fixture,
    graph_to_doc,
    layout_from_doc,
    layout_to_doc,
    render_svg,
    verify,
)
from trvg.server import create_app

FIXTURE_NAMES = ["fig1_k5", "fig6a_G", "fig6b_itrvg", "fig7a_Gprime", "graph_Gprime"]


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def moved_d3_doc():
    doc = layout_to_doc(fixture("fig6b_itrvg"))
    rect = next(r for r in doc["rects"] if r["id"] == "D3")
    rect["x"] = [100, 101]
    return doc


def test_extract_matches_library(client):
    layout = fixture("fig1_k5")
    res = client.post("/api/extract", json=layout_to_doc(layout))
    assert res.status_code == 200
    assert res.json() == graph_to_doc(extract(layout))


def test_extract_intersecting_layout(client):
    layout = fixture("fig6b_itrvg")
    res = client.post("/api/extract", json=layout_to_doc(layout))
    assert res.status_code == 200
    assert res.json() == graph_to_doc(extract(layout))


def test_extract_schema_error_is_400_with_path(client):
    doc = layout_to_doc(fixture("fig1_k5"))
    doc["rects"][0]["x"] = [0, 0]
    res = client.post("/api/extract", json=doc)
    assert res.status_code == 400
    body = res.json()
    assert set(body) == {"error", "detail"}
    assert body["error"] == "schema_error"
    assert body["detail"].startswith("$.rects[0]")


def test_extract_overlap_is_422(client):
    doc = {
        "mode": "trvg",
        "rects": [
            {"id": "a", "x": [0, 2], "y": [0, 2]},
            {"id": "b", "x": [1, 3], "y": [1, 3]},
        ],
    }
    res = client.post("/api/extract", json=doc)
    assert res.status_code == 422
    assert res.json()["error"] == "overlap_violation"


def test_non_json_body_is_400(client):
    res = client.post(
        "/api/extract", content=b"not json", headers={"content-type": "application/json"}
    )
    assert res.status_code == 400
    body = res.json()
    assert body["error"] == "schema_error"
    assert body["detail"].startswith("$")


def test_non_object_body_is_400(client):
    res = client.post("/api/extract", json=[1, 2, 3])
    assert res.status_code == 400
    assert res.json()["error"] == "schema_error"


def test_verify_identity_ok(client):
    layout = fixture("fig6b_itrvg")
    target = fixture("fig6a_G")
    payload = {"layout": layout_to_doc(layout), "graph": graph_to_doc(target)}
    res = client.post("/api/verify", json=payload)
    assert res.status_code == 200
    assert res.json() == verify(layout, target, "identity").to_json_dict()
    assert res.json()["ok"] is True
    assert res.json()["missing"] == []
    assert res.json()["extra"] == []


def test_verify_search_returns_bijection(client):
    layout = fixture("fig7a_Gprime")
    target = fixture("graph_Gprime")
    payload = {
        "layout": layout_to_doc(layout),
        "graph": graph_to_doc(target),
        "mapping": "search",
    }
    res = client.post("/api/verify", json=payload)
    assert res.status_code == 200
    assert res.json() == verify(layout, target, None).to_json_dict()
    assert res.json()["ok"] is True
    assert sorted(res.json()["bijection"]) == list(range(8))


def test_verify_explicit_mapping(client):
    layout = fixture("fig1_k5")
    target = extract(layout)
    mapping = {f"r{i}": i - 1 for i in range(1, 6)}
    payload = {
        "layout": layout_to_doc(layout),
        "graph": graph_to_doc(target),
        "mapping": mapping,
    }
    res = client.post("/api/verify", json=payload)
    assert res.status_code == 200
    assert res.json()["ok"] is True


def test_verify_reports_missing_edges(client):
    doc = moved_d3_doc()
    target = fixture("fig6a_G")
    res = client.post("/api/verify", json={"layout": doc, "graph": graph_to_doc(target)})
    assert res.status_code == 200
    report = res.json()
    assert report["ok"] is False
    assert report["missing"] == [[10, 11], [10, 12]]
    assert report["extra"] == []
    assert report == verify(layout_from_doc(doc), target, "identity").to_json_dict()


def test_verify_missing_graph_key(client):
    payload = {"layout": layout_to_doc(fixture("fig1_k5"))}
    res = client.post("/api/verify", json=payload)
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.graph")


def test_verify_bad_mapping_value(client):
    payload = {
        "layout": layout_to_doc(fixture("fig1_k5")),
        "graph": graph_to_doc(extract(fixture("fig1_k5"))),
        "mapping": "best",
    }
    res = client.post("/api/verify", json=payload)
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.mapping")


def test_decide_matches_library(client):
    g = fixture("graph_Gprime")
    res = client.post("/api/decide", json={"graph": graph_to_doc(g)})
    assert res.status_code == 200
    assert res.json() == decide_trvg(g).to_json_dict()
    assert res.json()["outcome"] == "yes"
    assert res.json()["nodes"] == 787


def test_decide_budget_unknown(client):
    from trvg import complete_multipartite

    g = complete_multipartite([3, 3, 3])
    payload = {"graph": graph_to_doc(g), "budget": {"max_nodes": 10}}
    res = client.post("/api/decide", json=payload)
    assert res.status_code == 200
    assert res.json() == decide_trvg(g, Budget(max_nodes=10)).to_json_dict()
    assert res.json()["outcome"] == "unknown"


def test_decide_screens(client):
    from trvg import complete_multipartite

    g = complete_multipartite([4, 4])
    res = client.post("/api/decide", json={"graph": graph_to_doc(g), "screens": True})
    assert res.status_code == 200
    body = res.json()
    assert body == decide_trvg(g, Budget(), Screens(True, True)).to_json_dict()
    assert body["evidence"] == {"kind": "edge_bound", "k": 2, "n": 8, "e": 16, "bound": 14}
    assert body["nodes"] == 0


def test_decide_itrvg_mode(client):
    from trvg import Graph

    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    res = client.post("/api/decide", json={"graph": graph_to_doc(g), "mode": "itrvg"})
    assert res.status_code == 200
    body = res.json()
    assert body == decide_itrvg(g).to_json_dict()
    assert body["outcome"] == "yes"
    assert body["certificate"]["mode"] == "itrvg"


def test_decide_bad_mode(client):
    g = graph_to_doc(fixture("graph_Gprime"))
    res = client.post("/api/decide", json={"graph": g, "mode": "both"})
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.mode")


def test_decide_bad_budget(client):
    g = graph_to_doc(fixture("graph_Gprime"))
    res = client.post("/api/decide", json={"graph": g, "budget": {"max_nodes": "big"}})
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.budget.max_nodes")
    res = client.post("/api/decide", json={"graph": g, "budget": {"max_nodes": 0}})
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.budget")


def test_decide_deterministic_bytes(client):
    g = graph_to_doc(fixture("graph_Gprime"))
    first = client.post("/api/decide", json={"graph": g})
    second = client.post("/api/decide", json={"graph": g})
    assert first.content == second.content


def test_fixture_endpoint_matches_library(client):
    from trvg import Layout

    for name in FIXTURE_NAMES:
        obj = fixture(name)
        doc = layout_to_doc(obj) if isinstance(obj, Layout) else graph_to_doc(obj)
        res = client.get(f"/api/fixture/{name}")
        assert res.status_code == 200
        assert res.json() == doc


def test_fixture_unknown_is_404(client):
    res = client.get("/api/fixture/fig99")
    assert res.status_code == 404
    body = res.json()
    assert body["error"] == "unknown_fixture"
    assert "fig99" in body["detail"]


def test_render_matches_library(client):
    layout = fixture("fig1_k5")
    payload = {"layout": layout_to_doc(layout), "options": {"edges": True}}
    res = client.post("/api/render", json=payload)
    assert res.status_code == 200
    assert res.headers["content-type"].startswith("image/svg+xml")
    assert res.text == render_svg(layout, show_edges=True)


def test_render_strips_and_scale(client):
    layout = fixture("fig7a_Gprime")
    payload = {
        "layout": layout_to_doc(layout),
        "options": {"strips": ["B1", "B2", "B3"], "scale": 20, "bbox": True},
    }
    res = client.post("/api/render", json=payload)
    assert res.status_code == 200
    expected = render_svg(layout, strip_ids=["B1", "B2", "B3"], show_bbox=True, scale=20)
    assert res.text == expected


def test_render_bad_scale(client):
    payload = {"layout": layout_to_doc(fixture("fig1_k5")), "options": {"scale": 0}}
    res = client.post("/api/render", json=payload)
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.options.scale")


def test_classify_bipartite(client):
    res = client.get("/api/classify", params={"bipartite": "3,4"})
    assert res.status_code == 200
    assert res.json() == {"family": "bipartite", "args": [3, 4], "status": "TRVG"}
    res = client.get("/api/classify", params={"bipartite": "3,5"})
    assert res.json()["status"] == "non-TRVG"


def test_classify_multipartite(client):
    res = client.get("/api/classify", params={"multipartite": "3,3,3"})
    assert res.status_code == 200
    assert res.json() == {"family": "multipartite", "args": [3, 3, 3], "status": "non-TRVG"}
    res = client.get("/api/classify", params={"multipartite": "2,3,4"})
    assert res.json()["status"] == "TRVG"


def test_classify_dn2(client):
    table = {"9": "TRVG", "12": "open", "20": "non-TRVG"}
    for arg, status in table.items():
        res = client.get("/api/classify", params={"dn2": arg})
        assert res.status_code == 200
        assert res.json() == {
            "family": "cycle-square-complement",
            "args": [int(arg)],
            "status": status,
        }


def test_classify_requires_exactly_one_selector(client):
    res = client.get("/api/classify")
    assert res.status_code == 400
    res = client.get("/api/classify", params={"bipartite": "3,3", "dn2": "9"})
    assert res.status_code == 400


def test_classify_bad_values(client):
    res = client.get("/api/classify", params={"bipartite": "3,x"})
    assert res.status_code == 400
    assert res.json()["detail"].startswith("$.bipartite")
    res = client.get("/api/classify", params={"bipartite": "3"})
    assert res.status_code == 400
    res = client.get("/api/classify", params={"dn2": "3"})
    assert res.status_code == 422
    assert res.json()["error"] == "too_small"


def test_cors_preflight_allows_localhost(client):
    res = client.options(
        "/api/decide",
        headers={
            "Origin": "http://localhost:5173",
            "Access-Control-Request-Method": "POST",
        },
    )
    assert res.status_code == 200
    assert res.headers["access-control-allow-origin"] == "http://localhost:5173"


def test_cors_ignores_other_origins(client):
    res = client.options(
        "/api/decide",
        headers={
            "Origin": "http://evil.example",
            "Access-Control-Request-Method": "POST",
        },
    )
    assert "access-control-allow-origin" not in res.headers
