import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from equicohom.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"
    assert resp.json()["schema"] == 1


def test_normalize(client):
    resp = client.post("/normalize", json={"ring": "bt2",
                                           "expr": "z00*z01*z10*z11"})
    body = resp.json()
    assert resp.status_code == 200
    assert body["schema"] == 1
    assert body["normal_form"] == "xi"


def test_normalize_parse_error(client):
    resp = client.post("/normalize", json={"ring": "bt2", "expr": "z99"})
    assert resp.status_code == 422
    assert "position" in resp.json()["detail"]


def test_multiply(client):
    resp = client.post("/multiply", json={"ring": "bt1",
                                          "exprs": ["z0", "z1"]})
    assert resp.json()["normal_form"] == "xi"


def test_basis_grid(client):
    resp = client.post("/basis", json={"coset": "W01+W10",
                                       "window": "0:2:0:4"})
    body = resp.json()
    cells = {(c["a"], c["b"]): c["count"] for c in body["cells"]}
    assert cells == {(0, 0): 1, (0, 2): 1, (2, 0): 1, (2, 2): 3, (2, 4): 2}
    first = body["cells"][0]
    assert first["monomials"] == ["z01*z10"]


def test_basis_bt1(client):
    resp = client.post("/basis", json={"ring": "bt1", "coset": "0",
                                       "window": "0:2:0:2"})
    cells = {(c["a"], c["b"]): c["monomials"] for c in resp.json()["cells"]}
    assert cells[(0, 2)] == ["z0*cw"]
    assert cells[(2, 2)] == ["cxw*cw"]


def test_basis_window_error(client):
    resp = client.post("/basis", json={"window": "0:500:0:500"})
    assert resp.status_code == 422


def test_map_eta(client):
    resp = client.post("/map", json={"name": "eta", "expr": "z01"})
    body = resp.json()
    assert isinstance(body["result"], list) and len(body["result"]) == 4
    assert body["result"][0] == "z01"


def test_map_unknown(client):
    resp = client.post("/map", json={"name": "bogus", "expr": "z00"})
    assert resp.status_code == 422


def test_euler(client):
    resp = client.post("/euler", json={"m": 0, "n": 0, "twisted": False})
    assert resp.json()["result"] == "0"
    resp = client.post("/euler", json={"m": 0, "n": 0, "twisted": True})
    assert resp.json()["result"] == "e^2"


def test_waner(client):
    resp = client.post("/waner", json={"bundles": ["w1"]})
    body = resp.json()
    assert body["coefficients"] == ["z10*z11", "cw1"]
    resp = client.post("/waner", json={"bundles": ["nope"]})
    assert resp.status_code == 422


def test_push(client):
    resp = client.post("/push", json={"a1": "1"})
    assert resp.json()["result"] == "Z2"


def test_verify_subset(client):
    resp = client.post("/verify", json={"criteria": ["C01a"]})
    body = resp.json()
    assert body["ok"] is True
    assert body["results"][0]["name"] == "C01a"
    assert body["results"][0]["passed"] is True
    resp = client.post("/verify", json={"criteria": ["nope"]})
    assert resp.status_code == 422
