import pytest
from starlette.testclient import TestClient

from longhom.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


def test_index_lists_endpoints(client):
    resp = client.get("/")
    assert resp.status_code == 200
    body = resp.json()
    assert body["service"] == "longhom"
    assert "/classify" in body["endpoints"]


def test_classify(client):
    resp = client.post("/classify",
                       json={"n": 3, "term": "max(x1, min(x2, x3))"})
    assert resp.status_code == 200
    assert resp.json() == {"antichain": [[1], [2, 3]],
                           "representative": "max(x1,min(x2,x3))"}


def test_equiv(client):
    resp = client.post("/equiv", json={"n": 2, "f": "max(x1, 5)", "g": "x1"})
    assert resp.json() == {"equivalent": True,
                           "left": [[1]], "right": [[1]]}
    resp = client.post("/equiv", json={"n": 2, "f": "x1", "g": "x2"})
    assert resp.json()["equivalent"] is False


def test_count_targets(client):
    cases = [
        ({"target": "rn-to-r", "n": 4}, 167),
        ({"target": "ln-to-r", "n": 2}, 47),
        ({"target": "rn-to-l", "n": 3}, 37),
        ({"target": "pipe", "code": "UDUDUDUD"}, 47),
    ]
    for body, want in cases:
        resp = client.post("/count", json=body)
        assert resp.status_code == 200
        assert resp.json() == {"count": want}


def test_dmatrix(client):
    resp = client.post("/dmatrix", json={"n": 2, "terms": "min(x1, x2); x1"})
    assert resp.json() == {
        "n": 2,
        "rows": [{"I": [1], "J": [2]},
                 {"I": [2], "J": None},
                 {"I": [1, 2], "J": [1, 2]}],
    }


def test_monoid_check(client):
    resp = client.post("/monoid-check",
                       json={"n": 2, "f": "x2; x1", "g": "min(x1, x2); 3"})
    body = resp.json()
    assert body["equal"] is True
    assert body["lhs"] == body["rhs"]


def test_pipe_endpoints(client):
    resp = client.post("/pipe-order", json={"code": "UUD"})
    assert resp.json() == {"k": 3,
                           "order": [[1, 2], [1, 3], [2, 3]],
                           "classes": 4}
    resp = client.post("/pipe-equiv", json={"a": "UUD", "b": "DDU"})
    assert resp.json() == {"equivalent": True}


def test_signed_class(client):
    resp = client.post("/signed-class",
                       json={"n": 1, "term": "max(p1, n1)"})
    assert resp.json() == {"antichain": [["+1"], ["-1"]]}


def test_classify_into_l(client):
    resp = client.post("/classify-into-l",
                       json={"n": 2, "sign": "+", "term": "x1"})
    assert resp.json() == {"tag": "plus", "antichain": [[1]]}
    resp = client.post("/classify-into-l",
                       json={"n": 2, "sign": "-", "term": "0"})
    assert resp.json() == {"tag": "bounded"}


def test_domain_errors_are_400(client):
    bad = [
        ("/classify", {"n": 2, "term": "max(x1"}),
        ("/classify", {"n": 0, "term": "x1"}),
        ("/count", {"target": "pipe"}),
        ("/count", {"target": "rn-to-r", "n": 7}),
        ("/pipe-order", {"code": "UXD"}),
        ("/dmatrix", {"n": 2, "terms": "x1"}),
        ("/signed-class", {"n": 1, "term": "x1"}),
    ]
    for path, body in bad:
        resp = client.post(path, json=body)
        assert resp.status_code == 400, (path, body)
        assert "detail" in resp.json()


def test_shape_errors_are_422(client):
    resp = client.post("/classify", json={"term": "x1"})  # n missing
    assert resp.status_code == 422
    resp = client.post("/count", json={"target": "sideways", "n": 1})
    assert resp.status_code == 422
    resp = client.post("/classify-into-l",
                       json={"n": 1, "sign": "*", "term": "x1"})
    assert resp.status_code == 422
