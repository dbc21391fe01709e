"""Service endpoints and the CLI thin client."""

import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from spinhecke.cli import main as cli_main
from spinhecke.service import app

client = TestClient(app)


def test_health_and_discovery():
    assert client.get("/health").json() == {"status": "ok"}
    listing = client.get("/algebras").json()
    assert "spin" in listing["algebras"]
    assert "intertwine" in listing["suites"]


def test_nf_braid():
    r = client.post("/nf", json={"algebra": "spin", "n": 3,
                                 "expr": "R2*R1*R2"})
    assert r.status_code == 200
    body = r.json()
    assert body["parity"] == "odd"
    words = {t["word"]: t["coeff"] for t in body["terms"]}
    assert words == {"R1*R2*R1": "1", "R2": "-q^-2 + 2 - q^2",
                     "R1": "q^-2 - 2 + q^2"}


def test_nf_deterministic():
    payload = {"algebra": "spin-aff", "n": 2, "expr": "R1*p1*q2 - q1"}
    a = client.post("/nf", json=payload).content
    b = client.post("/nf", json=payload).content
    assert a == b


def test_mul_endpoint():
    r = client.post("/mul", json={"algebra": "spin", "n": 3,
                                  "lhs": "R2*R1*R2", "rhs": "R1"})
    assert r.status_code == 200
    body = r.json()
    got = {t["word"]: t["coeff"] for t in body["terms"]}
    assert got["R1*R2"] == "-q^-2 - q^2"


def test_parse_error_payload():
    r = client.post("/nf", json={"algebra": "spin", "n": 3, "expr": "R9"})
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert detail["code"] == "parse"
    assert detail["offset"] == 0
    r = client.post("/nf", json={"algebra": "spin", "n": 3, "expr": "R1 ++"})
    assert r.status_code == 400


def test_dims_endpoint():
    r = client.get("/dims", params={"algebra": "spin", "n": 4})
    assert r.json()["dimension"] == 24
    r = client.get("/dims", params={"algebra": "cover", "n": 3})
    body = r.json()
    assert body["dimension"] == 12 and body["even_dimension"] == 6
    r = client.get("/dims", params={"algebra": "spin-aff", "n": 2})
    assert r.status_code == 400


def test_map_endpoint():
    r = client.post("/map", json={"name": "psi", "n": 2, "expr": "R1"})
    body = r.json()
    assert body["algebra"] == "hc"
    assert any(t["word"] == "c1*T1" for t in body["terms"])
    r = client.post("/map", json={"name": "sigma", "n": 3, "expr": "R1"})
    assert r.json()["expr"] == "R2"
    r = client.post("/map", json={"name": "nosuch", "n": 2, "expr": "R1"})
    assert r.status_code == 400


def test_jm_endpoint():
    body = client.get("/jm", params={"n": 2}).json()
    assert body["p"] == ["1", "(q^-2 - 1 + q^2)"]
    assert body["q"] == ["0", "(-q^-1 + q)*R1"]


def test_cyclotomic_endpoint():
    body = client.post("/cyclotomic", json={"F": "X^2-1", "n": 2}).json()
    assert body["case"] == 2 and body["g"] == "1" and body["dimension"] == 8
    body = client.post("/cyclotomic", json={"F": "X-1", "n": 3}).json()
    assert body["case"] == 4 and body["dimension"] == 6
    r = client.post("/cyclotomic", json={"F": "X^2+X-1"})
    assert r.status_code == 400


def test_classify_endpoint():
    body = client.post("/cyclotomic/classify",
                       json={"gens": ["p1-1", "q1"], "n": 4}).json()
    assert body["case"] == 4 and body["dimension"] == 24
    r = client.post("/cyclotomic/classify", json={"gens": ["p1 + q1"]})
    assert r.status_code == 400


def test_rep_endpoint():
    body = client.get("/rep", params={"n": 3, "expr": "R1*R1"}).json()
    assert body["dim"] == 4
    diag = body["matrix"][0][0]
    assert diag == "-q^-2 - q^2"


def test_verify_endpoint():
    body = client.post("/verify", json={"suite": "jm"}).json()
    assert body["passed"] is True
    assert all(c["status"] == "pass" for c in body["checks"])
    r = client.post("/verify", json={"suite": "nosuch"})
    assert r.status_code == 400


def test_intertwine_endpoint():
    body = client.post("/intertwine", json={"n": 2, "check": "all"}).json()
    assert body["passed"] is True
    names = [c["relation"] for c in body["checks"]]
    assert any("gimel2" in s for s in names)


def test_cli_nf(capsys):
    code = cli_main(["nf", "--algebra", "spin", "--n", "3",
                     "--expr", "R2*R1*R2"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["parity"] == "odd"


def test_cli_dims(capsys):
    code = cli_main(["dims", "--algebra", "spin", "--n", "4"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["dimension"] == 24


def test_cli_parse_error_exit(capsys):
    code = cli_main(["nf", "--algebra", "spin", "--n", "3", "--expr", "R9"])
    capsys.readouterr()
    assert code == 2


def test_cli_verify(capsys):
    code = cli_main(["verify", "--suite", "center"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["passed"] is True


def test_cli_map_and_jm(capsys):
    code = cli_main(["map", "--name", "phi", "--n", "2", "--expr", "T1"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["algebra"] == "tensor"
    code = cli_main(["jm", "--n", "3"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["p"][0] == "1"


def test_cli_exit_code_on_failed_report(capsys):
    from spinhecke.cli import _emit
    code = _emit(200, {"passed": False, "checks": []})
    capsys.readouterr()
    assert code == 3
