import json

import pytest
from fastapi.testclient import TestClient

from durfee import intervals
from durfee.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_partition_count_endpoint(client):
    r = client.get("/partitions/count/50")
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 204226
    assert 1.0 < body["ratio"] < 1.10


def test_partition_count_big_integer_round_trips(client):
    r = client.get("/partitions/count/1000")
    count = json.loads(r.content)["count"]
    assert count == 24061467864032622473692149727991


def test_partition_count_ratio_narrows_by_1000(client):
    body = client.get("/partitions/count/1000").json()
    assert 1.0 < body["ratio"] < 1.03


def test_partition_count_of_zero_has_no_estimate(client):
    body = client.get("/partitions/count/0").json()
    assert body["count"] == 1
    assert body["ratio"] is None


def test_partition_count_resource_cap(client):
    r = client.get("/partitions/count/2000000")
    assert r.status_code == 422
    assert "resource cap" in r.json()["detail"]


def test_distribution_endpoint(client):
    body = client.get("/durfee/distribution", params={"n": 4}).json()
    assert body["counts"] == [0, 4, 1]
    assert body["probabilities"] == [0.0, 0.8, 0.2]
    assert body["mode"] == 1
    assert body["max_h"] == 2


def test_interval_endpoint(client):
    body = client.get("/durfee/interval", params={"n": 500}).json()
    assert abs(body["low"] - 9) <= 1 and abs(body["high"] - 14) <= 1
    assert body["mass"] >= 0.98
    assert body["estimate_display"] == 12.1
    minw = client.get("/durfee/interval", params={"n": 500, "rule": "minwidth"}).json()
    assert minw["high"] - minw["low"] <= body["high"] - body["low"]


def test_interval_bad_epsilon(client):
    r = client.get("/durfee/interval", params={"n": 50, "epsilon": 2.0})
    assert r.status_code == 400


def test_tail_endpoint(client):
    body = client.get("/durfee/tail", params={"n": 4, "t": 2}).json()
    assert body["probability"] == 0.2
    body = client.get("/durfee/tail", params={"n": 1677, "t": 32}).json()
    assert body["probability"] < 1e-7
    assert body["display"] != "0"


def test_estimate_endpoint(client):
    body = client.get("/durfee/estimate", params={"n": 1012}).json()
    assert body["estimate_display"] == 17.2
    assert body["max_h"] == 31


def test_concentration_endpoint(client):
    body = client.get("/durfee/concentration", params={"n": 100, "epsilon": 0.2}).json()
    assert 0 < body["mass"] < 1
    assert body["window_low"] < body["mu"] < body["window_high"]


def test_assess_endpoint(client):
    r = client.post("/profiles/assess", json={
        "scholar": {"name": "R. Stanley", "citations": 6510, "h": 35,
                    "citations_nonbook": 3273, "h_nonbook": 32},
    })
    body = r.json()
    assert body["estimate_display"] == 43.6
    assert abs(body["shortfall_percent"] - 20) <= 1
    assert body["revised"]["estimate_display"] == 30.9
    assert body["interval"]["mass"] >= 0.98


def test_assess_endpoint_rejects_invalid_record(client):
    r = client.post("/profiles/assess", json={"scholar": {"citations": 10, "h": 4}})
    assert r.status_code == 400
    assert "exceeds" in r.json()["detail"]


def test_profiles_analyze_endpoint(client):
    r = client.post("/profiles/analyze", json={
        "profiles": [{"name": "X", "citations_per_paper": [0, 1, 3, 5]}],
    })
    body = r.json()["profiles"][0]
    assert body["h"] == 2
    assert body["citations"] == 9
    assert body["n_papers"] == 4


def test_cohort_endpoint_degenerate_correlation_is_recorded(client):
    r = client.post("/cohort/analyze", json={
        "records": [{"name": "only", "citations": 100, "h": 5}],
    })
    body = r.json()
    assert r.status_code == 200
    assert body["pearson_r"] is None
    assert body["pearson_error"]
    assert len(body["assessments"]) == 1


def test_cohort_endpoint_correlates(client):
    r = client.post("/cohort/analyze", json={
        "records": [
            {"name": "a", "citations": 100, "h": 5},
            {"name": "b", "citations": 900, "h": 14},
            {"name": "c", "citations": 2500, "h": 24},
        ],
    })
    body = r.json()
    assert body["pearson_r"] == pytest.approx(1.0, abs=0.05)
    assert body["out_of_interval"] == []


def test_bundled_cohort_endpoint(client):
    body = client.get("/datasets/appendix").json()
    assert len(body["assessments"]) == 119
    assert 0.91 <= body["pearson_r"] <= 0.96
    assert body["pearson_r_nonbook"] > body["pearson_r"]
    assert client.get("/datasets/table1").status_code == 404


def test_sampler_endpoint_deterministic(client):
    payload = {"n": 4, "samples": 5000, "seed": 7, "compare_exact": True}
    first = client.post("/sampler/run", json=payload).json()
    second = client.post("/sampler/run", json=payload).json()
    assert first["histogram"] == second["histogram"]
    assert first["tv_distance"] < 0.03
    assert first["rng"] == "mt19937"


def test_sampler_endpoint_validates_method_size(client):
    r = client.post("/sampler/run", json={"n": 6000, "samples": 1, "seed": 0})
    assert r.status_code == 422


def test_reproduce_endpoint(client):
    body = client.get("/reproduce/table1").json()
    assert body["summary"]["within_one"] == 26
    assert client.get("/reproduce/bogus").status_code == 404


def test_interval_json_numbers_at_full_precision(client):
    body = client.get("/durfee/interval", params={"n": 1012}).json()
    assert body["estimate"] == intervals.rule_of_thumb(1012).value
