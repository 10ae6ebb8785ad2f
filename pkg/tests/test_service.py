import pytest
from fastapi.testclient import TestClient

from eaqecc.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestCheck:
    def test_ea_report(self, client):
        response = client.post("/check", json={"code": "[[12,2,6;2]]"})
        assert response.status_code == 200
        body = response.json()
        assert body["code"]["notation"] == "[[12,2,6;2]]"
        statuses = {entry["bound"]: entry["status"] for entry in body["bounds"]}
        assert statuses["ea_griesmer"] == "saturated"
        assert body["rates"]["r_display"] == "0.1666"

    def test_degeneracy_flag(self, client):
        response = client.post("/check", json={"code": "[[8,1,5;1]]", "degeneracy": "degenerate"})
        statuses = {entry["bound"]: entry["status"] for entry in response.json()["bounds"]}
        assert statuses["ea_hamming"] == "violated"

    def test_big_counters_are_strings(self, client):
        response = client.post("/check", json={"code": "[[8,1,5;1]]"})
        hamming = next(e for e in response.json()["bounds"] if e["bound"] == "ea_hamming")
        assert hamming["detail"]["sphere_count"] == "277"
        assert hamming["detail"]["budget"] == "256"
        assert hamming["slack"] == {"num": "-21", "den": "1"}

    def test_classical_report(self, client):
        response = client.post("/check", json={"code": "[21,3,16]_4"})
        statuses = {entry["bound"]: entry["status"] for entry in response.json()["bounds"]}
        assert statuses == {
            "griesmer": "saturated",
            "plotkin": "saturated",
            "griesmer_based": "saturated",
        }

    def test_domain_error_is_400(self, client):
        response = client.post("/check", json={"code": "[[3,2;4]]"})
        assert response.status_code == 400
        assert "0 <= c <= n" in response.json()["error"]

    def test_parse_error_is_400(self, client):
        response = client.post("/check", json={"code": "[[5,1,3"})
        assert response.status_code == 400


class TestConcat:
    def test_single_order(self, client):
        response = client.post("/concat", json={"outer": "[[3,1,3;2]]", "inner": "[[4,1,3;1]]"})
        body = response.json()
        assert body["result"]["code"]["notation"] == "[[12,1,>=9;5]]"
        assert body["result"]["procedure"] == "divisible"

    def test_both_orders(self, client):
        response = client.post(
            "/concat",
            json={"outer": "[[4,2,2;1]]", "inner": "[[3,2,2;2]]", "both_orders": True},
        )
        body = response.json()
        assert body["forward"]["code"]["c"] == 5
        assert body["reverse"]["code"]["c"] == 7
        assert body["ebit_difference"] == -2

    def test_force_collision_rejected(self, client):
        response = client.post(
            "/concat",
            json={"outer": "[[7,3,3;1]]", "inner": "[[6,3,3;2]]", "force": 1},
        )
        assert response.status_code == 400


class TestPseudothreshold:
    def test_named_composition(self, client):
        response = client.post(
            "/pseudothreshold", json={"outer": "rep3132", "inner": "five13"}
        )
        body = response.json()
        assert body["value"] == pytest.approx(0.228469, abs=5e-6)
        assert any("2/9" in note for note in body["notes"])

    def test_explicit_coefficients(self, client):
        coeffs = [{"num": 0}, {"num": 0}, {"num": 10}, {"num": -20}, {"num": 15}, {"num": -4}]
        response = client.post("/pseudothreshold", json={"coefficients": coeffs})
        assert response.json()["value"] == pytest.approx(0.131123, abs=5e-6)

    def test_no_crossing_reported(self, client):
        response = client.post("/pseudothreshold", json={"outer": "rep3132"})
        body = response.json()
        assert body["value"] is None
        assert any("no fixed point" in note for note in body["notes"])

    def test_unknown_name(self, client):
        response = client.post("/pseudothreshold", json={"outer": "nope"})
        assert response.status_code == 400


class TestScan:
    def test_forward_scan(self, client):
        response = client.post(
            "/scan-eahb",
            json={"outer_family": "rep_odd", "inner": "C1", "n_max": 15},
        )
        body = response.json()
        assert body["onset"] == 3
        first = body["rows"][0]
        assert first["notation"] == "[[24,1,>=15;5]]"
        assert first["sphere_count"] == "866296315"
        assert first["verdict"] == "violated"

    def test_reversed_scan(self, client):
        response = client.post(
            "/scan-eahb",
            json={"outer_family": "rep_odd", "inner": "C1", "n_max": 15, "reversed": True},
        )
        body = response.json()
        assert body["onset"] is None
        assert all(row["verdict"] == "satisfied" for row in body["rows"])

    def test_inner_by_notation(self, client):
        response = client.post(
            "/scan-eahb",
            json={"outer_family": "rep_odd", "inner": "[[8,1,5;1]]", "n_max": 9},
        )
        assert response.status_code == 200


class TestFamilyAndTables:
    def test_family_listing(self, client):
        response = client.get("/family/rep_odd", params={"n_min": 3, "n_max": 9})
        body = response.json()
        assert [m["n"] for m in body["members"]] == [3, 5, 7, 9]
        assert body["members"][0]["code"]["notation"] == "[[3,1,3;2]]"

    def test_fixed_code_family(self, client):
        body = client.get("/family/C1").json()
        assert len(body["members"]) == 1

    def test_table1(self, client):
        body = client.get("/table1").json()
        rows = {row["notation"]: row for row in body["rows"]}
        assert rows["[[9,1,9;8]]"]["r_e"] == "0.8888"
        assert rows["[[15,1,9;2]]"]["r_n"] == "-0.0666"
        assert body["notes"]

    def test_curve(self, client):
        response = client.post(
            "/curve",
            json={"outer": "five13", "p_min": "0", "p_max": "0.5", "steps": 3},
        )
        points = response.json()["points"]
        assert points[0] == {"p": "0", "p_l": "0"}
        assert points[1]["p"] == "0.25"

    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}
