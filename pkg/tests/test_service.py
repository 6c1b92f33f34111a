import pytest
from fastapi.testclient import TestClient

import reference_values as ref
from heylandcircle.service import app

client = TestClient(app)


@pytest.fixture()
def payload():
    return {
        "I0": 6.0,
        "phi0_deg": 85.0,
        "Isc": 12.0,
        "phi_sc_deg": 69.0667,
        "V_rated": 400.0,
        "V_sc": 100.0,
        "P_rated_kw": 5.6,
    }


class TestHealth:
    def test_ok(self):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestDiagram:
    def test_reference_geometry(self, payload):
        response = client.post("/diagram", json=payload)
        assert response.status_code == 200
        body = response.json()
        assert body["C_x"] == pytest.approx(ref.CENTER[0], rel=1e-9)
        assert body["C_y"] == pytest.approx(ref.CENTER[1], rel=1e-9)
        assert body["r"] == pytest.approx(ref.RADIUS, rel=1e-9)
        assert body["D_x"] == pytest.approx(ref.SPLIT_D[0], rel=1e-9)
        assert body["power_scale_w_per_a"] == pytest.approx(
            ref.POWER_SCALE_W_PER_A, rel=1e-9
        )
        assert body["O_prime_x"] == pytest.approx(ref.O_PRIME[0], rel=1e-9)
        assert body["A_y"] == pytest.approx(ref.A_POINT[1], rel=1e-9)

    def test_invariant_violation_maps_to_422(self, payload):
        payload["phi_sc_deg"] = 86.0
        response = client.post("/diagram", json=payload)
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["error"] == "InvariantViolation"

    def test_missing_field_rejected(self, payload):
        del payload["V_sc"]
        response = client.post("/diagram", json=payload)
        assert response.status_code == 422


class TestQuery:
    def test_at_rated(self, payload):
        response = client.post("/query", json={"data": payload, "at_rated": True})
        assert response.status_code == 200
        body = response.json()
        assert body["power_factor"] == pytest.approx(ref.RATED_PF, rel=1e-9)
        assert body["slip"] == pytest.approx(ref.RATED_SLIP, rel=1e-9)
        assert body["efficiency"] == pytest.approx(ref.RATED_EFFICIENCY, rel=1e-9)
        assert body["regime"] == "motoring"
        assert body["torque_nm"] is None

    def test_by_slip(self, payload):
        response = client.post("/query", json={"data": payload, "slip": 0.0498})
        assert response.status_code == 200
        body = response.json()
        assert body["x"] == pytest.approx(ref.SLIP_POINT_0_0498[0], rel=1e-9)
        assert body["y"] == pytest.approx(ref.SLIP_POINT_0_0498[1], rel=1e-9)

    def test_torque_present_with_speed_inputs(self, payload):
        payload["f_hz"] = 50.0
        payload["poles"] = 4
        response = client.post("/query", json={"data": payload, "slip": 0.0498})
        assert response.status_code == 200
        assert response.json()["torque_nm"] is not None

    def test_selector_required(self, payload):
        response = client.post("/query", json={"data": payload})
        assert response.status_code == 422

    def test_selectors_exclusive(self, payload):
        response = client.post(
            "/query", json={"data": payload, "slip": 0.05, "at_rated": True}
        )
        assert response.status_code == 422

    def test_infeasible_output(self, payload):
        response = client.post("/query", json={"data": payload, "output_kw": 99.0})
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["error"] == "InfeasibleOutput"
        assert "feasible maximum" in detail["message"]


class TestSweep:
    def test_rows_ascend(self, payload):
        response = client.post(
            "/sweep",
            json={"data": payload, "s_from": 0.01, "s_to": 1.0, "n": 5},
        )
        assert response.status_code == 200
        rows = response.json()["rows"]
        assert len(rows) == 5
        slips = [row["slip"] for row in rows]
        assert slips == sorted(slips)
        assert rows[-1]["output_w"] == pytest.approx(0.0, abs=1e-6)

    def test_bad_range_maps_to_422(self, payload):
        response = client.post(
            "/sweep",
            json={"data": payload, "s_from": 1.0, "s_to": 0.01, "n": 5},
        )
        assert response.status_code == 422
        assert response.json()["detail"]["error"] == "InvariantViolation"


class TestValidate:
    def test_reference_passes(self, payload):
        response = client.post("/validate", json={"data": payload, "samples": 60})
        assert response.status_code == 200
        body = response.json()
        assert body["passed"] is True
        assert body["max_locus_dev_rel"] <= 1e-6
        assert body["slip_roundtrip_dev"] <= 1e-6
        assert body["power_crosscheck_dev"] <= 1e-6
        assert body["R1_ohm"] == pytest.approx(ref.R1_OHM, rel=1e-9)
        assert body["R2_ohm"] == pytest.approx(ref.R2_OHM, rel=1e-9)
        assert body["X_ohm"] == pytest.approx(ref.X_OHM, rel=1e-9)
        assert body["Y0_mag_s"] == pytest.approx(ref.Y0_MAG_S, rel=1e-9)
        assert body["Y0_ang_deg"] == pytest.approx(ref.Y0_ANG_DEG, rel=1e-9)


class TestRender:
    def test_svg_bytes(self, payload):
        request = {"data": payload, "slip_lines": [0.05, 1.0]}
        first = client.post("/render", json=request)
        assert first.status_code == 200
        assert first.headers["content-type"].startswith("image/svg+xml")
        assert first.content.startswith(b"<?xml")
        second = client.post("/render", json=request)
        assert second.content == first.content

    def test_bad_canvas_maps_to_422(self, payload):
        response = client.post(
            "/render", json={"data": payload, "width_px": 10}
        )
        assert response.status_code == 422
        assert response.json()["detail"]["error"] == "InvariantViolation"
