import pytest
from fastapi.testclient import TestClient

from sympfaff.service import create_app
from sympfaff.tableaux import count_symplectic_standard_even


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_count_matches_library(client):
    resp = client.post("/count", json={"n": 6, "degree": 2})
    assert resp.status_code == 200
    assert resp.json()["count"] == count_symplectic_standard_even(2, 3)


def test_enumerate(client):
    resp = client.post("/enumerate", json={"n": 4, "degree": 1})
    assert resp.status_code == 200
    body = resp.json()["results"][0]
    assert body["count"] == 5 and len(body["tableaux"]) == 5
    assert client.post("/enumerate", json={"n": 4}).status_code == 422


def test_straighten(client):
    resp = client.post(
        "/straighten",
        json={"n": 4, "combo": [{"coeff": "1", "tableau": [[1, -1]]}]},
    )
    assert resp.status_code == 200
    assert resp.json()["combo"] == [{"coeff": "1", "tableau": [[-2, 2]]}]
    bad = client.post(
        "/straighten", json={"n": 4, "combo": [{"coeff": "1", "tableau": [[1, 2, 3]]}]}
    )
    assert bad.status_code == 422


def test_dim_and_check(client):
    resp = client.post("/dim", json={"n": 4, "degree": 2, "check": True})
    assert resp.status_code == 200
    body = resp.json()
    assert body == {"dim": 14, "count": 14, "agree": True}
    resp = client.post("/dim", json={"n": 4, "degree": 1, "field": "fp:11"})
    assert resp.json()["dim"] == 5
    assert client.post("/dim", json={"n": 4, "degree": 1, "field": "fp:2"}).status_code == 422


def test_verify(client):
    resp = client.post("/verify", json={"n": 4, "points": 2, "seed": 3})
    assert resp.status_code == 200
    assert resp.json()["ok"] is True


def test_sample(client):
    resp = client.post("/sample", json={"n": 4, "seed": 1})
    assert resp.status_code == 200
    matrix = resp.json()["matrix"]
    assert len(matrix) == 4 and matrix[2][2] == "0"
    again = client.post("/sample", json={"n": 4, "seed": 1})
    assert again.json() == resp.json()


def test_chart(client):
    resp = client.post("/chart", json={"n": 4, "seed": 2, "count": 2})
    assert resp.status_code == 200
    assert resp.json()["ok"] is True
    assert client.post("/chart", json={"n": 6, "seed": 0, "count": 1}).status_code == 422


def test_odd_n_rejected(client):
    assert client.post("/count", json={"n": 5, "degree": 1}).status_code == 422
