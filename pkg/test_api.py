#!/usr/bin/env python3
"""Tests for the HTTP service."""

import pytest
from fastapi.testclient import TestClient

from gammamorphic.main import app
from gammamorphic.report import IdentityId


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert "barnes-g" in body["functions"]


def test_eval(client):
    response = client.post("/api/eval", json={"function": "gamma", "x": 5})
    assert response.status_code == 200
    body = response.json()
    assert abs(body["value"]["re"] - 24.0) < 1e-12
    assert body["value"]["im"] == 0.0


def test_eval_complex_with_params(client):
    response = client.post(
        "/api/eval",
        json={"function": "g2", "x": "1.5", "params": {"alpha": 2.0}, "log": True},
    )
    assert response.status_code == 200
    assert response.json()["function"] == "g2"


def test_eval_domain_errors_are_unprocessable(client):
    response = client.post("/api/eval", json={"function": "barnes-g", "x": 0})
    assert response.status_code == 422
    assert "ZeroError" in response.json()["detail"]
    response = client.post("/api/eval", json={"function": "nope", "x": 1})
    assert response.status_code == 422


def test_table(client):
    manifest = {"function": "barnes-g", "grid": {"start": 1.0, "stop": 3.0, "count": 5}}
    response = client.post("/api/table", json=manifest)
    assert response.status_code == 200
    rows = response.json()
    assert [r["arg_re"] for r in rows] == [1.0, 1.5, 2.0, 2.5, 3.0]


def test_constants(client):
    names = [r["name"] for r in client.get("/api/constants").json()]
    assert names == [
        "euler_gamma", "zeta_3", "ln_glaisher", "glaisher",
        "ln_omega_tilde", "zeta_prime_minus_one", "ln_g_half",
    ]


def test_identities(client):
    response = client.get("/api/identities", params={"density": "dense"})
    assert response.status_code == 200
    rows = response.json()
    assert [r["id"] for r in rows] == [i.value for i in IdentityId]
    crossroute = next(r for r in rows if r["id"] == "S2_CROSSROUTE")
    assert crossroute["grid_points"] == 12
    assert client.get("/api/identities", params={"density": "bogus"}).status_code == 422


def test_verify_subset(client):
    response = client.post("/api/verify", json={"only": ["KINKELIN_FE"], "density": "small"})
    assert response.status_code == 200
    body = response.json()
    assert body["summary"]["exit_code"] == 0
    assert all(r["id"] == "KINKELIN_FE" for r in body["reports"])
