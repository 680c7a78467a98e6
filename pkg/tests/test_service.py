import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from hre.cli import main as cli_main
from hre.jsonfmt import dumps_canonical
from hre.service import create_app

from conftest import DATA_DIR


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def _doc(name):
    return json.loads((DATA_DIR / name).read_text())


class TestRankEndpoint:
    def test_worked_document(self, client):
        resp = client.post("/api/rank", json=_doc("worked3.json"))
        assert resp.status_code == 200
        report = resp.json()
        assert report["ranking"] == {"a": 2, "b": 4, "c": 1}
        assert report["guaranteed"] is True

    def test_validation_error_names_entry(self, client):
        resp = client.post("/api/rank", json=_doc("reciprocity_bad.json"))
        assert resp.status_code == 422
        body = resp.json()
        assert body["index"] == [0, 1]

    def test_infeasible_409(self, client):
        resp = client.post("/api/rank", json=_doc("infeasible4.json"))
        assert resp.status_code == 409
        body = resp.json()
        assert body["kind"] == "infeasible"

    def test_singular_409(self, client):
        resp = client.post("/api/rank", json=_doc("singular4.json"))
        assert resp.status_code == 409
        assert resp.json()["kind"] == "singular"

    def test_byte_identical_responses(self, client):
        a = client.post("/api/rank", json=_doc("worked3.json")).content
        b = client.post("/api/rank", json=_doc("worked3.json")).content
        assert a == b

    def test_cli_parity(self, client):
        api_report = client.post("/api/rank", json=_doc("worked3.json")).json()
        result = CliRunner().invoke(cli_main, ["rank", "--json",
                                               str(DATA_DIR / "worked3.json")])
        cli_report = json.loads(result.output)
        assert api_report == cli_report
        assert dumps_canonical(api_report) == result.output.strip()

    def test_judgments_body(self, client):
        body = {
            "labels": ["a", "b", "c"],
            "judgments": [
                {"i": "a", "j": "b", "value": 0.5},
                {"i": "a", "j": "c", "value": 2.0},
                {"i": "b", "j": "c", "value": 4.0},
            ],
            "known": {"c": 1.0},
        }
        resp = client.post("/api/rank", json=body)
        assert resp.status_code == 200
        assert resp.json()["ranking"] == {"a": 2, "b": 4, "c": 1}

    def test_malformed_body(self, client):
        resp = client.post("/api/rank", content=b"not json",
                           headers={"content-type": "application/json"})
        assert resp.status_code == 422


class TestCheckEndpoint:
    def test_consistent_guaranteed(self, client):
        resp = client.post("/api/check", json=_doc("worked3.json"))
        assert resp.status_code == 200
        cert = resp.json()
        assert cert["guaranteed"] is True
        assert cert["worst_triad"] is not None

    def test_above_bound(self, client):
        resp = client.post("/api/check", json=_doc("infeasible4.json"))
        cert = resp.json()
        assert cert["guaranteed"] is False
        assert cert["bound"] == pytest.approx(0.232, abs=5e-4)

    def test_scalar_case(self, client):
        resp = client.post("/api/check", json=_doc("scalar3.json"))
        cert = resp.json()
        assert cert["guaranteed"] is True
        assert cert["scalar_case"] is True

    def test_invalid_422(self, client):
        resp = client.post("/api/check", json=_doc("reciprocity_bad.json"))
        assert resp.status_code == 422


class TestBoundTableEndpoint:
    def test_table7(self, client):
        resp = client.get("/api/bound-table", params={"n_max": 7})
        assert resp.status_code == 200
        table = resp.json()
        assert table["3"]["1"] == 0.5
        assert table["7"]["5"] == pytest.approx(5 / 6, abs=1e-9)
        assert set(table) == {"3", "4", "5", "6", "7"}

    def test_minimal(self, client):
        resp = client.get("/api/bound-table", params={"n_max": 3})
        assert resp.json() == {"3": {"1": 0.5}}

    def test_domain_400(self, client):
        resp = client.get("/api/bound-table", params={"n_max": 2})
        assert resp.status_code == 400


class TestCompareEndpoint:
    def test_consistent(self, client):
        resp = client.post("/api/compare", json=_doc("worked3.json"))
        assert resp.status_code == 200
        report = resp.json()
        assert report["comparison"]["kendall_tau"] == 1
        assert report["hre_error"] is None

    def test_singular_partial_result(self, client):
        resp = client.post("/api/compare", json=_doc("singular4.json"))
        assert resp.status_code == 200
        report = resp.json()
        assert report["hre_error"]["kind"] == "singular"
        assert report["eigenvector"] is not None

    def test_invalid_422(self, client):
        resp = client.post("/api/compare", json=_doc("reciprocity_bad.json"))
        assert resp.status_code == 422
