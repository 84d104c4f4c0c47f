import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from patience_sorting.service import app

WORKED_PAIR = {
    "R": {"n": 8, "piles": [[6, 4, 1], [5, 2], [8, 7, 3]]},
    "S": {"n": 8, "piles": [[4, 2, 1], [7, 3], [8, 6, 5]]},
}


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/").json()
    assert body["service"] == "patience-sorting"
    assert "/sort" in body["endpoints"]
    assert "/verify" in body["endpoints"]


def test_sort(client):
    resp = client.post("/sort", json={"perm": "64518723"})
    assert resp.status_code == 200
    assert resp.json() == {"n": 8, "piles": [[6, 4, 1], [5, 2], [8, 7, 3]]}


def test_sort_empty_perm(client):
    assert client.post("/sort", json={"perm": ""}).json() == {"n": 0, "piles": []}


def test_sort_bad_perm_is_400(client):
    resp = client.post("/sort", json={"perm": "13"})
    assert resp.status_code == 400
    assert "detail" in resp.json()


def test_missing_field_is_422(client):
    assert client.post("/sort", json={}).status_code == 422


def test_rpw_and_normal_agree(client):
    rpw = client.post("/rpw", json={"perm": "64518723"}).json()
    normal = client.post("/normal", json={"perm": "64518723"}).json()
    assert rpw == normal == {"perm": "64152873"}


def test_shadow(client):
    resp = client.post("/shadow", json={"perm": "2143"})
    assert resp.json() == {"lines": [[[1, 2], [2, 1]], [[3, 4], [4, 3]]]}


def test_extended(client):
    resp = client.post("/extended", json={"perm": "64518723"})
    assert resp.status_code == 200
    assert resp.json() == WORKED_PAIR


def test_invert_round_trip(client):
    resp = client.post("/invert", json=WORKED_PAIR)
    assert resp.status_code == 200
    assert resp.json() == {"perm": "64518723"}


def test_invert_unstable_is_409(client):
    bad = {
        "R": {"n": 3, "piles": [[3, 1], [2]]},
        "S": {"n": 3, "piles": [[3, 1], [2]]},
    }
    resp = client.post("/invert", json=bad)
    assert resp.status_code == 409
    assert "not a stable pair" in resp.json()["detail"]


def test_invert_invalid_config_is_409(client):
    bad = {
        "R": {"n": 2, "piles": [[1, 2]]},
        "S": {"n": 2, "piles": [[2, 1]]},
    }
    assert client.post("/invert", json=bad).status_code == 409


def test_class(client):
    resp = client.post("/class", json={"perm": "231"})
    assert resp.json() == {"perms": ["213", "231"]}


def test_avoid(client):
    yes = client.post("/avoid", json={"perm": "3142", "pattern": "3-~1-42"})
    no = client.post("/avoid", json={"perm": "231", "pattern": "3-~1-42"})
    assert yes.json() == {"avoids": True}
    assert no.json() == {"avoids": False}


def test_occurrences(client):
    resp = client.post("/occurrences", json={"perm": "2431", "pattern": "2-31"})
    assert resp.json() == {"occurrences": [[1, 3, 4]]}


def test_occurrences_barred_is_400(client):
    resp = client.post("/occurrences", json={"perm": "2431", "pattern": "3-~1-42"})
    assert resp.status_code == 400


def test_enumerate_configs(client):
    resp = client.post("/enumerate", json={"what": "configs", "n": 3})
    body = resp.json()
    assert body["report"] is None
    assert len(body["items"]) == 5
    assert body["items"][0] == {"n": 3, "piles": [[3, 2, 1]]}


def test_enumerate_avoiders(client):
    resp = client.post(
        "/enumerate", json={"what": "avoiders", "n": 5, "pattern": "3-~1-42"}
    )
    body = resp.json()
    assert body["items"] is None
    assert body["report"]["value"] == 52


def test_enumerate_avoiders_without_pattern_is_400(client):
    resp = client.post("/enumerate", json={"what": "avoiders", "n": 5})
    assert resp.status_code == 400


def test_enumerate_guard_is_409(client):
    resp = client.post("/enumerate", json={"what": "stable-pairs", "n": 7})
    assert resp.status_code == 409
    assert "PATIENCE_MAX_N" in resp.json()["detail"]


def test_enumerate_noncrossing_zero_is_409(client):
    resp = client.post("/enumerate", json={"what": "noncrossing", "n": 0})
    assert resp.status_code == 409


def test_enumerate_bad_what_is_422(client):
    resp = client.post("/enumerate", json={"what": "nonsense", "n": 3})
    assert resp.status_code == 422


def test_verify(client):
    resp = client.post("/verify", json={"max_n": 2})
    body = resp.json()
    assert body["ok"] is True
    assert len(body["results"]) == 24
    assert all(r["pass"] for r in body["results"])
